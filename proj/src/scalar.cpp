#include "cgeo/scalar.hpp"

#include "cgeo/errors.hpp"

namespace cgeo {

Scalar::Scalar(ChartPtr chart, Poly num, Poly den) : chart_(std::move(chart)) {
  num = chart_->reduce(num);
  den = chart_->reduce(den);
  if (den.is_zero())
    throw DomainError("division by zero (denominator vanishes" +
                      std::string(chart_->has_relation() ? " modulo the relation)" : ")"));
  if (num.is_zero()) {
    num_ = Poly::zero(num.nvars());
    den_ = Poly::constant(num.nvars(), Rat(1));
    return;
  }
  Poly g = Poly::gcd(num, den);
  if (!g.is_constant()) {
    auto qn = num.divide_exact(g);
    auto qd = den.divide_exact(g);
    if (!qn || !qd) throw EngineError("gcd does not divide its arguments");
    num = *qn;
    den = *qd;
  }
  // monic denominator pins the scale, making the form unique
  Rat lc = den.leading_term().coeff;
  num_ = num * (Rat(1) / lc);
  den_ = den * (Rat(1) / lc);
}

Scalar Scalar::zero(const ChartPtr& chart) { return constant(chart, Rat(0)); }

Scalar Scalar::constant(const ChartPtr& chart, const Rat& c) {
  return Scalar(chart, Poly::constant(chart->nvars(), c), Poly::constant(chart->nvars(), Rat(1)));
}

Scalar Scalar::coordinate(const ChartPtr& chart, std::size_t var) {
  if (var >= chart->nvars()) throw DomainError("coordinate index out of range");
  return Scalar(chart, Poly::variable(chart->nvars(), var),
                Poly::constant(chart->nvars(), Rat(1)));
}

Scalar Scalar::fraction(const ChartPtr& chart, const Poly& num, const Poly& den) {
  return Scalar(chart, num, den);
}

Scalar Scalar::from_poly(const ChartPtr& chart, const Poly& num) {
  return Scalar(chart, num, Poly::constant(chart->nvars(), Rat(1)));
}

Rat Scalar::constant_value() const {
  if (!is_constant()) throw DomainError("scalar is not constant");
  return num_.constant_value() / den_.constant_value();
}

Scalar Scalar::operator+(const Scalar& o) const {
  ensure_same_chart(chart_, o.chart_);
  return Scalar(chart_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  ensure_same_chart(chart_, o.chart_);
  return Scalar(chart_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  ensure_same_chart(chart_, o.chart_);
  return Scalar(chart_, num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  ensure_same_chart(chart_, o.chart_);
  if (o.is_zero()) throw DomainError("division by zero scalar");
  return Scalar(chart_, num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::pow(std::uint32_t e) const {
  if (e == 0) return constant(chart_, Rat(1));
  return Scalar(chart_, num_.pow(e), den_.pow(e));
}

bool Scalar::operator==(const Scalar& o) const { return (*this - o).is_zero(); }

Scalar Scalar::derivative(std::size_t var) const {
  if (var >= chart_->nvars()) throw DomainError("unknown coordinate in differentiation");
  // (n/d)' = (n'd - nd') / d^2
  return Scalar(chart_, num_.derivative(var) * den_ - num_ * den_.derivative(var),
                den_ * den_);
}

Rat Scalar::evaluate(const std::vector<Rat>& point) const {
  if (point.size() != chart_->nvars())
    throw DomainError("evaluation point must assign every coordinate");
  if (chart_->has_relation() && chart_->relation().evaluate(point) != 0)
    throw DomainError("point off the relation variety");
  Rat d = den_.evaluate(point);
  if (d == 0) throw DomainError("pole at evaluation point");
  return num_.evaluate(point) / d;
}

std::string Scalar::to_string() const {
  std::vector<std::string> names = chart_->names();
  names.resize(chart_->nvars());
  if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string(names);
  std::string n = num_.to_string(names);
  std::string d = den_.to_string(names);
  return "(" + n + ")/(" + d + ")";
}

} // namespace cgeo
