#ifndef CGEO_CATALOG_HPP
#define CGEO_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "cgeo/contact.hpp"
#include "cgeo/symplectic.hpp"

namespace cgeo {

enum class Provenance { Paper, Trivial, Derived };

std::string to_string(Provenance p);

/// One row of an entry's expected-property table, e.g.
/// {"classify-L", "non-degenerate", Derived}.
struct ExpectedProperty {
  std::string name;
  std::string value;
  Provenance provenance;
};

/// A built-in exactly-specified structure with its declared distributions and
/// the table of expected properties.
struct CatalogEntry {
  std::string id;
  std::string description;
  std::optional<ContactMetricStructure> contact;
  std::optional<SymplecticStructure> symplectic;
  std::vector<ExpectedProperty> expected;
  /// Set when the Lie-algebra bracket table failed the Jacobi identity and
  /// the entry is shipped as printed.
  std::optional<std::string> jacobi_failure;
};

CatalogEntry make_standard_sasakian(std::size_t n);
CatalogEntry make_s3();
CatalogEntry make_kappa_mu_group(std::size_t n);
CatalogEntry make_darboux_sasakian(std::size_t n);
CatalogEntry make_perturbed_r3(const std::string& f_text);
CatalogEntry make_standard_symplectic(std::size_t n);
CatalogEntry make_perturbed_r2(const std::string& f_text);

std::vector<std::string> catalog_ids();
bool is_catalog_id(const std::string& id);
CatalogEntry make_catalog_entry(const std::string& id);

/// Recomputes the named expected property from scratch through the public
/// operations and renders it in the table's value format.
std::string evaluate_expected_property(const CatalogEntry& entry, const std::string& name);

} // namespace cgeo

#endif
