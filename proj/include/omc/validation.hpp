#pragma once

// Structured pass/fail reports for instance and cycle validation.

#include <string>
#include <vector>

namespace omc {

struct ValidationCheck {
  std::string name;    // stable identifier, e.g. "central_symmetry"
  bool pass = false;
  std::string detail;  // human-readable evidence, empty when passing
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool all_pass() const {
    for (const ValidationCheck& c : checks)
      if (!c.pass) return false;
    return true;
  }

  std::string summary() const {
    std::string out;
    for (const ValidationCheck& c : checks) {
      out += c.pass ? "PASS " : "FAIL ";
      out += c.name;
      if (!c.detail.empty()) out += ": " + c.detail;
      out += '\n';
    }
    return out;
  }
};

}  // namespace omc
