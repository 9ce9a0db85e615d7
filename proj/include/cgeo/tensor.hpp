#ifndef CGEO_TENSOR_HPP
#define CGEO_TENSOR_HPP

#include <string>
#include <vector>

#include "cgeo/linalg.hpp"
#include "cgeo/scalar.hpp"

namespace cgeo {

/// Contravariant field: one Scalar component per chart coordinate (or per
/// Lie-frame element, in which case the components are constants).
class VectorField {
public:
  VectorField() = default;
  VectorField(ChartPtr chart, ScalarVec components);

  static VectorField zero(const ChartPtr& chart);
  static VectorField basis(const ChartPtr& chart, std::size_t index);

  const ChartPtr& chart() const { return chart_; }
  const ScalarVec& components() const { return comps_; }
  const Scalar& operator[](std::size_t i) const { return comps_[i]; }

  bool is_zero() const;
  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  VectorField operator-() const;
  VectorField operator*(const Scalar& f) const;
  bool operator==(const VectorField& o) const;

  /// Directional derivative V(f): sum of components times partials in a
  /// coordinate chart; identically zero over a Lie frame.
  Scalar apply_to(const Scalar& f) const;

  std::string to_string() const;

private:
  ChartPtr chart_;
  ScalarVec comps_;
};

/// Commutator of vector fields. Coordinate backend uses partial derivatives;
/// the Lie-frame backend contracts the structure-constant table bilinearly.
/// On an embedded chart the result is checked tangent to the relation variety.
VectorField lie_bracket(const VectorField& v, const VectorField& w);

/// True iff V applied to the chart relation vanishes modulo the relation.
bool check_tangency(const VectorField& v, const ChartPtr& chart);

class OneForm {
public:
  OneForm() = default;
  OneForm(ChartPtr chart, ScalarVec components);

  const ChartPtr& chart() const { return chart_; }
  const ScalarVec& components() const { return comps_; }
  Scalar apply(const VectorField& v) const;
  bool is_zero() const;

private:
  ChartPtr chart_;
  ScalarVec comps_;
};

/// Antisymmetric bilinear form; entries are the values on basis pairs under
/// the wedge convention 2u∧v = u⊗v − v⊗u.
class TwoForm {
public:
  TwoForm() = default;
  TwoForm(ChartPtr chart, ScalarMat components); // checks antisymmetry

  const ChartPtr& chart() const { return chart_; }
  const ScalarMat& components() const { return comps_; }
  Scalar apply(const VectorField& v, const VectorField& w) const;
  bool is_zero() const;

private:
  ChartPtr chart_;
  ScalarMat comps_;
};

class EndoField {
public:
  EndoField() = default;
  EndoField(ChartPtr chart, ScalarMat matrix);

  static EndoField zero(const ChartPtr& chart);
  static EndoField identity(const ChartPtr& chart);

  const ChartPtr& chart() const { return chart_; }
  const ScalarMat& matrix() const { return mat_; }
  VectorField apply(const VectorField& v) const;
  EndoField compose(const EndoField& o) const; // this ∘ o
  EndoField operator+(const EndoField& o) const;
  EndoField operator-(const EndoField& o) const;
  EndoField operator*(const Scalar& f) const;
  bool is_zero() const;

private:
  ChartPtr chart_;
  ScalarMat mat_;
};

class MetricField {
public:
  MetricField() = default;
  MetricField(ChartPtr chart, ScalarMat matrix); // checks symmetry

  const ChartPtr& chart() const { return chart_; }
  const ScalarMat& matrix() const { return mat_; }
  Scalar apply(const VectorField& v, const VectorField& w) const;
  /// One-form g(V, ·).
  OneForm lower(const VectorField& v) const;

private:
  ChartPtr chart_;
  ScalarMat mat_;
};

/// dα(V,W) = ½(V(α(W)) − W(α(V)) − α([V,W])), assembled on basis pairs.
TwoForm exterior_derivative(const OneForm& alpha);

/// (𝓛_V A)W = [V, AW] − A[V,W] on basis fields.
EndoField lie_derivative(const VectorField& v, const EndoField& a);
/// (𝓛_V g)(A,B) = V(g(A,B)) − g([V,A],B) − g(A,[V,B]) on basis pairs.
MetricField lie_derivative(const VectorField& v, const MetricField& g);
/// (𝓛_V α)(W) = V(α(W)) − α([V,W]) on basis fields.
OneForm lie_derivative(const VectorField& v, const OneForm& alpha);

enum class FrameRole { L, Q, Reeb, F, G, None };
enum class Block { L, Q, Reeb, D };

/// Ordered tangent frame with optional role tags and display names.
/// The Gram matrix w.r.t. the declared ambient metric must be nondegenerate,
/// which is checked when an expander is built.
struct Frame {
  ChartPtr chart;
  std::vector<VectorField> fields;
  std::vector<FrameRole> roles;
  std::vector<std::string> names;

  std::size_t size() const { return fields.size(); }
  std::vector<std::size_t> block_indices(Block b) const;
};

/// Exact expansion V = Σ cᵢ eᵢ through the Gram system G c = [g(V,eᵢ)].
/// Precomputes the inverse Gram matrix once.
class FrameExpander {
public:
  FrameExpander(Frame frame, MetricField metric);

  const Frame& frame() const { return frame_; }
  const MetricField& metric() const { return metric_; }
  const Scalar& gram_determinant() const { return gram_det_; }

  /// Coefficients of V in the frame; throws DomainError when V is not in the
  /// span (only possible on embedded charts, where the frame spans the
  /// tangent space but components live in the ambient chart).
  ScalarVec expand(const VectorField& v) const;

  /// Solves G c = p for prescribed pairings p_i = g(·, eᵢ) (Koszul-style
  /// assembly; no span check applies).
  ScalarVec expand_from_pairings(const ScalarVec& pairings) const;

  VectorField project(const VectorField& v, Block block) const;
  VectorField recombine(const ScalarVec& coeffs) const;
  /// Renders Σ cᵢ eᵢ using the frame's display names, e.g. "2*Y - x1*X".
  std::string format(const ScalarVec& coeffs) const;

private:
  Frame frame_;
  MetricField metric_;
  ScalarMat gram_inv_;
  Scalar gram_det_;
};

/// One-shot Gram-system expansion (see FrameExpander::expand).
ScalarVec frame_expand(const VectorField& v, const Frame& frame, const MetricField& metric);

VectorField project(const VectorField& v, const Frame& frame, const MetricField& metric,
                    Block block);

/// Span of finitely many generators; rank = generator count, checked for
/// symbolic independence where consumed.
struct Distribution {
  std::vector<VectorField> generators;
  std::size_t rank() const { return generators.size(); }
};

/// Generators independent over the rational-function field of the chart.
bool is_independent(const Distribution& d);

/// Frobenius test: brackets of all spanning pairs stay in the span
/// (symbolic rank over the function field; a generic, identically-zero test).
bool is_integrable(const Distribution& d);

} // namespace cgeo

#endif
