#ifndef CGEO_SYMPLECTIC_HPP
#define CGEO_SYMPLECTIC_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgeo/axioms.hpp"
#include "cgeo/connection.hpp"
#include "cgeo/tensor.hpp"

namespace cgeo {

/// Symplectic chart of dimension 2n with a transversal pair of rank-n
/// distributions (F-block, G-block). ω is checked antisymmetric, closed and
/// nondegenerate at construction; a supplied (J, g) pair is checked to be a
/// compatible Hermitian structure.
class SymplecticStructure {
public:
  SymplecticStructure(std::string name, ChartPtr chart, TwoForm omega,
                      std::vector<VectorField> f_generators, std::vector<std::string> f_names,
                      std::vector<VectorField> g_generators, std::vector<std::string> g_names,
                      std::optional<EndoField> j = std::nullopt,
                      std::optional<MetricField> g = std::nullopt);

  const std::string& name() const { return name_; }
  const ChartPtr& chart() const { return chart_; }
  const TwoForm& omega() const { return omega_; }
  const std::optional<EndoField>& complex_structure() const { return j_; }
  const std::optional<MetricField>& metric() const { return g_; }

  const Frame& frame() const { return expander_->frame(); }
  const std::shared_ptr<const FrameExpander>& expander() const { return expander_; }
  std::size_t lagrangian_rank() const { return chart_->dimension() / 2; }

  Distribution f_distribution() const;
  Distribution g_distribution() const;

private:
  std::string name_;
  ChartPtr chart_;
  TwoForm omega_;
  std::optional<EndoField> j_;
  std::optional<MetricField> g_;
  std::shared_ptr<const FrameExpander> expander_;
};

/// Rank n and ω = 0 on the span. Wrong rank is a DomainError.
bool lagrangian_check(const SymplecticStructure& s, const Distribution& d);

/// Bi-Lagrangian connection of the transversal Lagrangian pair (F,G), built
/// from the ω-analogue of the H operator; validated against the Hess axioms
/// (∇ω = 0, ∇F ⊂ F, ∇G ⊂ G, mixed torsion 0) before returning.
FrameConnection bi_lagrangian(const SymplecticStructure& s, const Distribution& f,
                              const Distribution& g);

AxiomReport check_hess_axioms(const FrameConnection& c, const SymplecticStructure& s,
                              const Distribution& f, const Distribution& g);

struct KahlerResult {
  EndoField j;
  MetricField g;
  AxiomReport report;
};

/// Blockwise complex structure J(Fᵢ) = Gᵢ, J(Gᵢ) = −Fᵢ and metric
/// g(V,W) = −ω(V,JW) from a flat bi-Lagrangian connection on a Darboux frame
/// (ω(Fᵢ,Gⱼ) = −½δᵢⱼ). The report verifies the Hermitian identities, ∇J = 0,
/// ∇g = 0, positivity of g at rational sample points, the coincidence of the
/// bi-Lagrangian with the Levi-Civita connection of g, and the
/// (∇g = 0 ⟺ ∇J = 0) equivalence.
KahlerResult kahler_from_flat_bilagrangian(const SymplecticStructure& s, const Distribution& f,
                                           const Distribution& g);

/// (∇g ≡ 0) ⟺ (∇J ≡ 0) for the bi-Lagrangian connection of (F,G) and a
/// Hermitian (J, ω, g); evaluated as two independent booleans.
AxiomReport check_hermitian_parallel_equivalence(const SymplecticStructure& s,
                                                 const Distribution& f, const Distribution& g,
                                                 const EndoField& j, const MetricField& metric);

} // namespace cgeo

#endif
