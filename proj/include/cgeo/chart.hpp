#ifndef CGEO_CHART_HPP
#define CGEO_CHART_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgeo/poly.hpp"

namespace cgeo {

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

/// Where tensor components live. A coordinate chart carries named coordinate
/// functions (optionally cut out by one polynomial relation, e.g. a sphere);
/// a Lie frame carries a constant-structure bracket table and its scalars are
/// plain rationals — every directional derivative of them vanishes.
class Chart {
public:
  enum class Backend { Coordinates, LieFrame };

  /// Coordinate chart; `relation` (if any) must be a nonconstant polynomial
  /// whose leading coordinate has a constant leading coefficient.
  static ChartPtr coordinates(std::vector<std::string> names);
  static ChartPtr embedded(std::vector<std::string> names, const Poly& relation);
  /// Lie-frame backend. structure_constants[i][j] holds the frame components
  /// of the bracket of elements i and j; antisymmetry is enforced here,
  /// the Jacobi identity is the caller's concern.
  static ChartPtr lie_frame(std::vector<std::string> names,
                            std::vector<std::vector<std::vector<Rat>>> structure_constants);

  Backend backend() const { return backend_; }
  bool is_lie_frame() const { return backend_ == Backend::LieFrame; }

  /// Number of vector-field components (= coordinates or frame elements).
  std::size_t dimension() const { return names_.size(); }
  /// Number of polynomial variables (0 for a Lie frame).
  std::size_t nvars() const { return backend_ == Backend::Coordinates ? names_.size() : 0; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool has_relation() const { return relation_.has_value(); }
  const Poly& relation() const;
  /// Index of the designated leading coordinate of the relation.
  std::size_t relation_leading_var() const { return lead_var_; }

  /// Normal form modulo the relation (identity when there is none):
  /// polynomial division eliminating powers >= deg of the leading coordinate.
  Poly reduce(const Poly& p) const;

  const std::vector<Rat>& bracket_constants(std::size_t i, std::size_t j) const;

private:
  Chart() = default;

  std::vector<std::string> names_;
  Backend backend_ = Backend::Coordinates;

  std::optional<Poly> relation_;
  std::size_t lead_var_ = 0;
  std::uint32_t lead_deg_ = 0;
  Rat lead_coeff_;

  std::vector<std::vector<std::vector<Rat>>> struct_const_;
};

/// Pointer identity: all values entering one operation must share the chart.
void ensure_same_chart(const ChartPtr& a, const ChartPtr& b);

} // namespace cgeo

#endif
