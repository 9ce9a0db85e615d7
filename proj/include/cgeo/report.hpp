#ifndef CGEO_REPORT_HPP
#define CGEO_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "cgeo/axioms.hpp"

namespace cgeo {

extern const char* const kEngineVersion;

/// Machine-readable result of one CLI command. Serialization is
/// deterministic: fixed key order, checks in evaluation order.
struct Report {
  std::string command;
  std::string subject;
  std::string suite;
  std::string connection;
  std::string with_connection;
  std::vector<std::string> notes;
  std::vector<CheckResult> checks;

  struct Coefficient {
    std::string direction; // frame element the derivative is taken along
    std::string argument;  // frame element being differentiated
    std::string component; // frame element of the output component
    std::string value;
  };
  std::vector<Coefficient> coefficients;
  bool has_coefficients = false;

  long timing_ms = 0;

  int exit_code() const {
    for (const auto& c : checks)
      if (!c.pass) return 1;
    return 0;
  }
};

/// JSON document with stable key order; witnesses longer than
/// max_witness_len are cut and marked "...[truncated]", never dropped.
nlohmann::ordered_json report_to_json(const Report& r, std::size_t max_witness_len);

/// Human-readable table of the same content.
std::string report_to_text(const Report& r, std::size_t max_witness_len);

std::string emit_report(const Report& r, const std::string& format,
                        std::size_t max_witness_len);

} // namespace cgeo

#endif
