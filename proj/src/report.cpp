#include "cgeo/report.hpp"

#include "cgeo/errors.hpp"

namespace cgeo {

const char* const kEngineVersion = "0.1.0";

namespace {
std::string clip(const std::string& s, std::size_t max_len) {
  if (s.size() <= max_len) return s;
  return s.substr(0, max_len) + "...[truncated]";
}
} // namespace

nlohmann::ordered_json report_to_json(const Report& r, std::size_t max_witness_len) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["engine_version"] = kEngineVersion;
  doc["command"] = r.command;
  doc["subject"] = r.subject;
  if (!r.suite.empty()) doc["suite"] = r.suite;
  if (!r.connection.empty()) doc["connection"] = r.connection;
  if (!r.with_connection.empty()) doc["with"] = r.with_connection;
  if (!r.notes.empty()) {
    nlohmann::ordered_json notes = nlohmann::ordered_json::array();
    for (const auto& n : r.notes) notes.push_back(n);
    doc["notes"] = notes;
  }
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["verdict"] = c.pass ? "pass" : "fail";
    if (!c.witness.empty()) cj["witness"] = clip(c.witness, max_witness_len);
    if (!c.hypothesis_flags.empty()) {
      nlohmann::ordered_json flags;
      for (const auto& [k, v] : c.hypothesis_flags) flags[k] = v;
      cj["hypothesis_flags"] = flags;
    }
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(cj);
  }
  doc["checks"] = checks;
  if (r.has_coefficients) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : r.coefficients) {
      nlohmann::ordered_json cj;
      cj["direction"] = c.direction;
      cj["argument"] = c.argument;
      cj["component"] = c.component;
      cj["value"] = clip(c.value, max_witness_len);
      coeffs.push_back(cj);
    }
    doc["coefficients"] = coeffs;
  }
  doc["exit"] = r.exit_code();
  doc["timing_ms"] = r.timing_ms;
  return doc;
}

std::string report_to_text(const Report& r, std::size_t max_witness_len) {
  std::string out;
  out += "subject: " + r.subject + "  command: " + r.command;
  if (!r.suite.empty()) out += "  suite: " + r.suite;
  if (!r.connection.empty()) out += "  connection: " + r.connection;
  if (!r.with_connection.empty()) out += "  with: " + r.with_connection;
  out += "\n";
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  for (const auto& c : r.checks) {
    out += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name;
    if (!c.witness.empty()) out += " -- " + clip(c.witness, max_witness_len);
    out += "\n";
    if (!c.hypothesis_flags.empty()) {
      out += "       flags:";
      for (const auto& [k, v] : c.hypothesis_flags)
        out += " " + k + "=" + (v ? "true" : "false");
      out += "\n";
    }
    if (!c.note.empty()) out += "       note: " + c.note + "\n";
  }
  if (r.has_coefficients) {
    if (r.coefficients.empty()) {
      out += "coefficients: all zero\n";
    } else {
      out += "nonzero coefficients:\n";
      for (const auto& c : r.coefficients)
        out += "  nabla_" + c.direction + " " + c.argument + " ^" + c.component + " = " +
               clip(c.value, max_witness_len) + "\n";
    }
  }
  out += "exit: " + std::to_string(r.exit_code()) + "\n";
  return out;
}

std::string emit_report(const Report& r, const std::string& format,
                        std::size_t max_witness_len) {
  if (format == "json") return report_to_json(r, max_witness_len).dump(2) + "\n";
  if (format == "text") return report_to_text(r, max_witness_len);
  throw DomainError("unknown report format: " + format);
}

} // namespace cgeo
