#pragma once

#include <string>
#include <vector>

namespace fincat {

/// One violated equation together with the witnesses that violate it.
struct Violation {
  std::string law;      // which equation failed
  std::string witness;  // the offending data, rendered
};

/// Result of a law checker: empty means every checked equation holds.
struct LawReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void fail(std::string law, std::string witness) {
    violations.push_back({std::move(law), std::move(witness)});
  }
  void absorb(const LawReport& other, const std::string& prefix) {
    for (const auto& v : other.violations)
      violations.push_back({prefix + v.law, v.witness});
  }
};

}  // namespace fincat
