#include "cgeo/chart.hpp"

#include <set>

#include "cgeo/errors.hpp"

namespace cgeo {

namespace {
void check_unique_names(const std::vector<std::string>& names) {
  if (names.empty()) throw DomainError("chart needs at least one coordinate");
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw DomainError("coordinate names must be unique");
}
} // namespace

ChartPtr Chart::coordinates(std::vector<std::string> names) {
  check_unique_names(names);
  auto chart = std::shared_ptr<Chart>(new Chart());
  chart->names_ = std::move(names);
  chart->backend_ = Backend::Coordinates;
  return chart;
}

ChartPtr Chart::embedded(std::vector<std::string> names, const Poly& relation) {
  check_unique_names(names);
  if (relation.nvars() != names.size())
    throw DomainError("relation polynomial arity does not match the chart");
  if (relation.is_constant()) throw DomainError("relation must be a nonconstant polynomial");

  auto chart = std::shared_ptr<Chart>(new Chart());
  chart->names_ = std::move(names);
  chart->backend_ = Backend::Coordinates;
  chart->relation_ = relation;

  // designated leading coordinate: the highest-index one appearing in the relation
  std::size_t lead = 0;
  bool found = false;
  for (std::size_t v = chart->names_.size(); v-- > 0;) {
    if (relation.degree(v) > 0) {
      lead = v;
      found = true;
      break;
    }
  }
  if (!found) throw DomainError("relation must involve a coordinate");
  chart->lead_var_ = lead;
  chart->lead_deg_ = relation.degree(lead);
  Poly lc = relation.coefficients_in(lead)[chart->lead_deg_];
  if (!lc.is_constant())
    throw DomainError("relation leading coefficient in " + chart->names_[lead] +
                      " must be a nonzero constant");
  chart->lead_coeff_ = lc.constant_value();
  return chart;
}

ChartPtr Chart::lie_frame(std::vector<std::string> names,
                          std::vector<std::vector<std::vector<Rat>>> structure_constants) {
  check_unique_names(names);
  std::size_t n = names.size();
  if (structure_constants.size() != n)
    throw DomainError("structure-constant table has wrong dimension");
  for (std::size_t i = 0; i < n; ++i) {
    if (structure_constants[i].size() != n)
      throw DomainError("structure-constant table has wrong dimension");
    for (std::size_t j = 0; j < n; ++j) {
      if (structure_constants[i][j].size() != n)
        throw DomainError("structure-constant table has wrong dimension");
      for (std::size_t k = 0; k < n; ++k) {
        if (structure_constants[i][j][k] != -structure_constants[j][i][k])
          throw DomainError("structure constants are not antisymmetric at [" +
                            names[i] + "," + names[j] + "]");
      }
    }
  }
  auto chart = std::shared_ptr<Chart>(new Chart());
  chart->names_ = std::move(names);
  chart->backend_ = Backend::LieFrame;
  chart->struct_const_ = std::move(structure_constants);
  return chart;
}

std::optional<std::size_t> Chart::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

const Poly& Chart::relation() const {
  if (!relation_) throw DomainError("chart has no relation");
  return *relation_;
}

Poly Chart::reduce(const Poly& p) const {
  if (!relation_) return p;
  Poly r = p;
  while (r.degree(lead_var_) >= lead_deg_) {
    std::uint32_t d = r.degree(lead_var_);
    Poly top = r.coefficients_in(lead_var_)[d]; // no lead_var_ inside
    Poly shift = Poly::variable(r.nvars(), lead_var_).pow(d - lead_deg_);
    r = r - top * shift * *relation_ * (Rat(1) / lead_coeff_);
  }
  return r;
}

const std::vector<Rat>& Chart::bracket_constants(std::size_t i, std::size_t j) const {
  if (backend_ != Backend::LieFrame) throw DomainError("chart has no structure constants");
  return struct_const_[i][j];
}

void ensure_same_chart(const ChartPtr& a, const ChartPtr& b) {
  if (a.get() != b.get()) throw DomainError("chart mismatch between operands");
}

} // namespace cgeo
