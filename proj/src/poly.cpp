#include "cgeo/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cgeo/errors.hpp"

namespace cgeo {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t t = 0;
  for (auto e : exps) t += e;
  return t;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += other.exps[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= other.exps[i];
  return r;
}

int monomial_cmp(const Monomial& a, const Monomial& b) {
  std::uint32_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
  return 0;
}

namespace {
struct MonoLess {
  // descending graded-lex, i.e. leading term first
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_cmp(a, b) > 0; }
};
} // namespace

Poly Poly::constant(std::size_t nvars, const Rat& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial{std::vector<std::uint32_t>(nvars, 0)}, c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t var) {
  Poly p(nvars);
  Monomial m{std::vector<std::uint32_t>(nvars, 0)};
  m.exps[var] = 1;
  p.terms_.push_back({m, Rat(1)});
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::map<Monomial, Rat, MonoLess> acc;
  for (auto& t : terms) acc[t.mono] += t.coeff;
  Poly p(nvars);
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.total_degree() == 0);
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_[0].coeff;
}

std::uint32_t Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_[0].mono.total_degree();
}

std::uint32_t Poly::degree(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree(var));
  return d;
}

const Poly::Term& Poly::leading_term() const {
  if (terms_.empty()) throw EngineError("leading term of zero polynomial");
  return terms_[0];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = monomial_cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rat s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  std::map<Monomial, Rat, MonoLess> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
  Poly r(nvars_);
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, c});
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  if (c == 0) return Poly(nvars_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly result = Poly::constant(nvars_, Rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = (e >>= 1) ? base * base : base;
  }
  return result;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Poly Poly::derivative(std::size_t var) const {
  Poly r(nvars_);
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono.degree(var);
    if (e == 0) continue;
    Term d = t;
    d.coeff *= Rat(static_cast<long>(e));
    d.mono.exps[var] = e - 1;
    r.terms_.push_back(d);
  }
  // differentiating preserves graded-lex order within the surviving terms
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return monomial_cmp(a.mono, b.mono) > 0; });
  return r;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
  if (point.size() != nvars_) throw DomainError("evaluation point has wrong arity");
  Rat total(0);
  for (const auto& t : terms_) {
    Rat v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t k = 0; k < t.mono.exps[i]; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  std::vector<Poly> coeffs(degree(var) + 1, Poly(nvars_));
  for (const auto& t : terms_) {
    Term stripped = t;
    std::uint32_t e = t.mono.degree(var);
    stripped.mono.exps[var] = 0;
    coeffs[e].terms_.push_back(stripped);
  }
  for (auto& c : coeffs)
    std::sort(c.terms_.begin(), c.terms_.end(),
              [](const Term& a, const Term& b) { return monomial_cmp(a.mono, b.mono) > 0; });
  return coeffs;
}

Poly Poly::from_coefficients_in(std::size_t nvars, std::size_t var,
                                const std::vector<Poly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    for (const auto& t : coeffs[e].terms()) {
      Term lifted = t;
      lifted.mono.exps[var] += static_cast<std::uint32_t>(e);
      terms.push_back(lifted);
    }
  }
  return from_terms(nvars, std::move(terms));
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) return std::nullopt;
  Poly q(nvars_);
  Poly r = *this;
  const Term& dl = d.leading_term();
  std::vector<Term> qterms;
  while (!r.is_zero()) {
    const Term& rl = r.leading_term();
    if (!dl.mono.divides(rl.mono)) return std::nullopt;
    Term t{rl.mono / dl.mono, rl.coeff / dl.coeff};
    qterms.push_back(t);
    Poly tp(nvars_);
    tp.terms_.push_back(t);
    r = r - tp * d;
  }
  return from_terms(nvars_, std::move(qterms));
}

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
  std::uint32_t db = b.degree(var);
  if (b.is_zero()) throw EngineError("pseudo-remainder by zero");
  Poly lcb = b.coefficients_in(var)[db];
  Poly r = a;
  while (!r.is_zero() && r.degree(var) >= db) {
    std::uint32_t dr = r.degree(var);
    Poly lcr = r.coefficients_in(var)[dr];
    Poly shift = Poly::variable(a.nvars(), var).pow(dr - db);
    r = r * lcb - b * lcr * shift;
  }
  return r;
}

Poly Poly::content_in(std::size_t var) const {
  Poly c(nvars_);
  for (const auto& coeff : coefficients_in(var)) {
    if (coeff.is_zero()) continue;
    c = gcd(c, coeff);
    if (c.is_constant()) break;
  }
  if (c.is_zero()) return c;
  return c.is_constant() ? Poly::constant(nvars_, Rat(1)) : c;
}

Poly Poly::normalized_primitive() const {
  if (is_zero()) return *this;
  // scale to coprime integer coefficients, positive leading coefficient
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_[0].coeff < 0) scale = -scale;
  return *this * scale;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.normalized_primitive();
  if (b.is_zero()) return a.normalized_primitive();
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.nvars(), Rat(1));

  // main variable: highest-index variable occurring in either operand
  std::size_t var = 0;
  bool found = false;
  for (std::size_t v = a.nvars(); v-- > 0;) {
    if (a.degree(v) > 0 || b.degree(v) > 0) {
      var = v;
      found = true;
      break;
    }
  }
  if (!found) return Poly::constant(a.nvars(), Rat(1));

  std::uint32_t da = a.degree(var), db = b.degree(var);
  if (da == 0) return gcd(a, b.content_in(var));
  if (db == 0) return gcd(a.content_in(var), b);

  Poly cont_a = a.content_in(var);
  Poly cont_b = b.content_in(var);
  auto pp_a = a.divide_exact(cont_a);
  auto pp_b = b.divide_exact(cont_b);
  if (!pp_a || !pp_b) throw EngineError("content does not divide its polynomial");
  Poly cont_gcd = gcd(cont_a, cont_b);

  // primitive polynomial remainder sequence in `var`
  Poly A = *pp_a, B = *pp_b;
  if (A.degree(var) < B.degree(var)) std::swap(A, B);
  while (true) {
    Poly R = pseudo_remainder(A, B, var);
    if (R.is_zero()) break;
    Poly cont_r = R.content_in(var);
    auto pp_r = R.divide_exact(cont_r);
    if (!pp_r) throw EngineError("content does not divide pseudo-remainder");
    A = B;
    B = *pp_r;
    if (B.degree(var) == 0) {
      // coprime primitive parts
      return cont_gcd.normalized_primitive();
    }
  }
  Poly cont_B = B.content_in(var);
  auto pp_B = B.divide_exact(cont_B);
  if (!pp_B) throw EngineError("content does not divide PRS tail");
  return (cont_gcd * *pp_B).normalized_primitive();
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.coeff;
    bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) c = -c;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      std::uint32_t e = t.mono.degree(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += rat_to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += rat_to_string(c) + "*" + mono;
    }
  }
  return out;
}

} // namespace cgeo
