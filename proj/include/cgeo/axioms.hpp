#ifndef CGEO_AXIOMS_HPP
#define CGEO_AXIOMS_HPP

#include <string>
#include <utility>
#include <vector>

namespace cgeo {

/// One named symbolic check. Failures carry a witness (the offending nonzero
/// quantity rendered as an expression); checks guarded by theorem hypotheses
/// carry the evaluated hypothesis flags.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;
  std::vector<std::pair<std::string, bool>> hypothesis_flags;
  std::string note;
};

struct AxiomReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool overall() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  CheckResult& add(const std::string& name) {
    checks.push_back(CheckResult{name});
    return checks.back();
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  void append(const AxiomReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

} // namespace cgeo

#endif
