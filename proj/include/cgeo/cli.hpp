#ifndef CGEO_CLI_HPP
#define CGEO_CLI_HPP

#include <optional>
#include <string>

#include "cgeo/manifest.hpp"
#include "cgeo/report.hpp"

namespace cgeo {

/// Parsed command-line request. Exactly one of catalog_id / manifest_path
/// selects the subject (export requires a catalog id).
struct CommandRequest {
  std::string command;           // validate|classify|connection|check|compare|export
  std::string catalog_id;
  std::string manifest_path;
  std::string suite;             // tanno|bilegendrian|metric-equiv|coincidence|tilde-theorem|appendix
  std::string connection = "";   // lc|tw|tilde|bl
  std::string with_connection;   // second operand of compare
  std::string format = "text";   // json|text
  std::size_t max_witness_len = 500;
};

struct CommandResult {
  Report report;
  /// Present for `export`: the manifest document itself.
  std::optional<Json> document;
};

/// Executes one command. DomainError/ParseError indicate input errors
/// (CLI exit 2); check failures are reported in the Report (exit 1).
CommandResult run_command(const CommandRequest& request);

} // namespace cgeo

#endif
