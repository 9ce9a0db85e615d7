#ifndef CGEO_CONNECTION_HPP
#define CGEO_CONNECTION_HPP

#include <memory>
#include <string>
#include <vector>

#include "cgeo/contact.hpp"

namespace cgeo {

/// Linear connection materialized as a coefficient table over a frame:
/// ∇_{e_i} e_j = Σ_k Γ^k_{ij} e_k. Equality of connections is componentwise
/// equality of tables over the same frame.
class FrameConnection {
public:
  FrameConnection(std::shared_ptr<const FrameExpander> expander,
                  std::vector<std::vector<ScalarVec>> gamma, std::string name);

  const std::string& name() const { return name_; }
  const Frame& frame() const { return expander_->frame(); }
  const std::shared_ptr<const FrameExpander>& expander() const { return expander_; }

  /// Γ^·_{ij} as a frame-coefficient vector.
  const ScalarVec& gamma(std::size_t i, std::size_t j) const { return gamma_[i][j]; }
  /// ∇_{e_i} e_j as a vector field.
  VectorField frame_derivative(std::size_t i, std::size_t j) const;

  /// ∇_V W for arbitrary fields in the frame's span.
  VectorField covariant_derivative(const VectorField& v, const VectorField& w) const;
  /// T(V,W) = ∇_V W − ∇_W V − [V,W].
  VectorField torsion(const VectorField& v, const VectorField& w) const;
  /// R(V,W)U = ∇_V ∇_W U − ∇_W ∇_V U − ∇_{[V,W]} U.
  VectorField curvature(const VectorField& v, const VectorField& w, const VectorField& u) const;

  bool equals(const FrameConnection& o) const;
  /// Index of a differing component, rendered, for witnesses.
  std::string first_difference(const FrameConnection& o) const;

private:
  std::shared_ptr<const FrameExpander> expander_;
  std::vector<std::vector<ScalarVec>> gamma_; // [i][j] -> coefficients over k
  std::string name_;
};

/// (∇_{e_i} g)(e_j, e_k) on all frame triples.
std::vector<std::vector<ScalarVec>> covariant_derivative_metric(const FrameConnection& c,
                                                                const MetricField& g);
/// (∇_{e_i} A)(e_j) on all frame pairs.
std::vector<std::vector<VectorField>> covariant_derivative_endo(const FrameConnection& c,
                                                                const EndoField& a);
/// (∇_{e_i} α)(e_j).
ScalarMat covariant_derivative_oneform(const FrameConnection& c, const OneForm& alpha);
/// (∇_{e_i} ω)(e_j, e_k).
std::vector<std::vector<ScalarVec>> covariant_derivative_twoform(const FrameConnection& c,
                                                                 const TwoForm& omega);

bool table3_is_zero(const std::vector<std::vector<ScalarVec>>& t);

/// S(e_i,e_j) = ∇1_{e_i} e_j − ∇2_{e_i} e_j as a frame-coefficient table.
struct DifferenceTensor {
  std::shared_ptr<const FrameExpander> expander;
  std::vector<std::vector<ScalarVec>> table;

  VectorField apply(const VectorField& v, const VectorField& w) const;
  bool is_zero() const;
};

DifferenceTensor difference_tensor(const FrameConnection& c1, const FrameConnection& c2);

/// Koszul-formula Levi-Civita connection over an arbitrary nondegenerate
/// frame; verified metric and torsion-free before returning.
FrameConnection koszul_levi_civita(const std::shared_ptr<const FrameExpander>& expander);

/// Levi-Civita connection of the associated metric on the adapted frame.
FrameConnection levi_civita(const ContactMetricStructure& s);

/// Generalized Tanaka-Webster connection:
/// *∇_V W = ∇̂_V W + η(V)φW + η(W)(φV + φhV) + dη(V + hV, W)ξ.
FrameConnection tanaka_webster(const ContactMetricStructure& s);

/// Canonical connection ∇̃: ∇̃_Z Z' = (∇̂_Z Z')_D, ∇̃_ξ Z = [ξ,Z], ∇̃ξ = 0.
FrameConnection tilde_connection(const ContactMetricStructure& s);

/// H(V,W): the unique section of the contact distribution with
/// dη(H(V,W),Z) = V(dη(W,Z)) − dη(W,[V,Z]) for every Z in D.
VectorField h_operator(const ContactMetricStructure& s, const VectorField& v,
                       const VectorField& w);

/// Bi-Legendrian connection of the transversal Legendrian pair (L,Q); the
/// inputs must be the structure's adapted-frame blocks. The constructed
/// table is validated against the defining axioms before returning.
FrameConnection bi_legendrian(const ContactMetricStructure& s, const Distribution& l,
                              const Distribution& q);

/// Tanno's axioms (i)-(iv) for a candidate canonical connection.
AxiomReport check_tanno_axioms(const FrameConnection& c, const ContactMetricStructure& s);

/// Defining axioms of the bi-Legendrian connection plus the torsion formulas
/// T(X,X') = −[X,X']_Q and T(Y,Y') = −[Y,Y']_L.
AxiomReport check_bilegendrian_axioms(const FrameConnection& c, const ContactMetricStructure& s,
                                      const Distribution& l, const Distribution& q);

/// Independent evaluation of the metric-connection equivalences
/// (i) ∇g=0, (ii) ∇φ=0, (iii) leafwise formula + h preserves L and Q,
/// (iv) bundle-like metric, and (v) total geodesicity when L, Q are
/// integrable; asserts that all evaluated booleans agree.
AxiomReport check_metric_equivalences(const ContactMetricStructure& s, const Distribution& l);

/// Coincidence logic between the bi-Legendrian and Tanaka-Webster
/// connections: hypothesis flags, the biconditional where its hypotheses
/// hold, the preserved-distribution implication, and the h and leafwise
/// identities where applicable.
AxiomReport check_coincidence_theorem(const ContactMetricStructure& s, const Distribution& l);

/// Axioms of ∇̃ ((i) ∇̃ξ=0, (ii) T̃ = 2dη⊗ξ, (iii) metric on D) plus the
/// K-contact and Sasakian equivalences and the Sasakian coincidence with *∇.
AxiomReport check_tilde_theorem(const ContactMetricStructure& s);

/// Eq-style helper: ∇̂_V ξ + φV + φhV ≡ 0 on frame elements.
AxiomReport check_reeb_derivative_identity(const ContactMetricStructure& s);

} // namespace cgeo

#endif
