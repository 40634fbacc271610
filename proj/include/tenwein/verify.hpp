#pragma once

#include <string>
#include <vector>

namespace tenwein {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string counterexample;  // empty when passing
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// suite in {weingarten, pc-routes, hurwitz, nodal, hciz}; max_n caps the
// exhaustive grids. Throws DomainError for an unknown suite name.
SuiteResult run_verify_suite(const std::string& suite, int max_n);

std::vector<std::string> verify_suite_names();

}  // namespace tenwein
