#ifndef CGEO_MANIFEST_HPP
#define CGEO_MANIFEST_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "cgeo/catalog.hpp"

namespace cgeo {

using Json = nlohmann::ordered_json;

/// A structure loaded from a manifest (or wrapped from a catalog entry).
struct Subject {
  std::string name;
  std::optional<ContactMetricStructure> contact;
  std::optional<SymplecticStructure> symplectic;
  bool lie_frame = false;
  std::optional<std::string> jacobi_failure;
};

/// Serializes a catalog entry (chart, structure tensors, distributions) as a
/// manifest document. Expressions travel as strings in the scalar grammar.
Json export_manifest(const CatalogEntry& entry);

/// Parses and validates a manifest document. Schema violations and
/// non-parsing expressions raise DomainError with the offending JSON path.
Subject load_manifest(const Json& doc);

Subject load_manifest_file(const std::string& path);

/// Catalog entry wrapped as a subject (including the Jacobi record).
Subject subject_from_catalog(const std::string& id);

} // namespace cgeo

#endif
