#ifndef CGEO_SCALAR_HPP
#define CGEO_SCALAR_HPP

#include <string>
#include <vector>

#include "cgeo/chart.hpp"

namespace cgeo {

/// Element of the rational-function field of a chart, kept in canonical form:
/// numerator and denominator reduced modulo the chart relation (embedded
/// mode), gcd-cancelled, denominator monic in graded-lex order. Immutable
/// after construction; all operations are pure.
class Scalar {
public:
  Scalar() = default;

  static Scalar zero(const ChartPtr& chart);
  static Scalar constant(const ChartPtr& chart, const Rat& c);
  static Scalar coordinate(const ChartPtr& chart, std::size_t var);
  static Scalar fraction(const ChartPtr& chart, const Poly& num, const Poly& den);
  static Scalar from_poly(const ChartPtr& chart, const Poly& num);

  const ChartPtr& chart() const { return chart_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// Canonical-form numerator is a constant and denominator is 1.
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const; // throws DomainError on zero divisor
  Scalar operator-() const;
  Scalar pow(std::uint32_t e) const;

  /// Semantic equality (identically-zero test on the difference); exact in
  /// the quotient field.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Exact partial derivative of the canonical representative, quotient rule,
  /// reduced modulo the relation in embedded mode.
  Scalar derivative(std::size_t var) const;

  /// Exact value at a rational point (one value per chart coordinate).
  /// Embedded mode requires the point to satisfy the relation.
  Rat evaluate(const std::vector<Rat>& point) const;

  std::string to_string() const;

private:
  Scalar(ChartPtr chart, Poly num, Poly den);

  ChartPtr chart_;
  Poly num_, den_;
};

/// The engine's equality oracle.
inline bool is_identically_zero(const Scalar& s) { return s.is_zero(); }

} // namespace cgeo

#endif
