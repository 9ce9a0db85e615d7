#ifndef CGEO_POLY_HPP
#define CGEO_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgeo/rat.hpp"

namespace cgeo {

/// Exponent vector of a power product. Two monomials of the same polynomial
/// always have the same length (the variable count of the ambient ring).
struct Monomial {
  std::vector<std::uint32_t> exps;

  std::uint32_t total_degree() const;
  std::uint32_t degree(std::size_t var) const { return var < exps.size() ? exps[var] : 0; }
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Quotient of power products; caller must ensure divisibility.
  Monomial operator/(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return exps == other.exps; }
};

/// Graded-lex: higher total degree first, ties broken lexicographically
/// with earlier variables weighing more. Returns <0, 0, >0 like strcmp.
int monomial_cmp(const Monomial& a, const Monomial& b);

/// Multivariate polynomial over the rationals in canonical form:
/// terms sorted graded-lex descending, no zero coefficients.
class Poly {
public:
  struct Term {
    Monomial mono;
    Rat coeff;
  };

  Poly() : nvars_(0) {}
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly zero(std::size_t nvars) { return Poly(nvars); }
  static Poly constant(std::size_t nvars, const Rat& c);
  static Poly variable(std::size_t nvars, std::size_t var);
  /// From unsorted term list; merges duplicates and drops zeros.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value (the whole value if is_constant()).
  Rat constant_value() const;

  std::uint32_t total_degree() const;
  std::uint32_t degree(std::size_t var) const;
  /// Leading term in graded-lex order. Polynomial must be nonzero.
  const Term& leading_term() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  Poly pow(std::uint32_t e) const;
  bool operator==(const Poly& o) const;

  Poly derivative(std::size_t var) const;
  Rat evaluate(const std::vector<Rat>& point) const;

  /// Coefficient polynomials of v^0..v^deg when the poly is read as
  /// univariate in `var` (each returned poly has degree 0 in `var`).
  std::vector<Poly> coefficients_in(std::size_t var) const;
  /// Inverse of coefficients_in.
  static Poly from_coefficients_in(std::size_t nvars, std::size_t var,
                                   const std::vector<Poly>& coeffs);

  /// Exact quotient, or nullopt if `d` does not divide this exactly.
  std::optional<Poly> divide_exact(const Poly& d) const;

  /// GCD in Q[x_1..x_n], primitive with positive leading coefficient;
  /// gcd(0,0) = 0, gcd(p,0) = normalized p, gcd never negative.
  static Poly gcd(const Poly& a, const Poly& b);

  /// Content = gcd of coefficients w.r.t. `var` (a poly of degree 0 in var).
  Poly content_in(std::size_t var) const;

  std::string to_string(const std::vector<std::string>& names) const;

private:
  std::size_t nvars_;
  std::vector<Term> terms_; // sorted graded-lex descending, no zero coeffs

  /// Scale so the graded-lex leading coefficient is a positive integer-free
  /// normal form: primitive over Z with positive leading coefficient.
  Poly normalized_primitive() const;

  friend Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var);
};

/// Pseudo-remainder of a by b in the variable `var` (lc_var(b)^k * a mod b).
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var);

} // namespace cgeo

#endif
