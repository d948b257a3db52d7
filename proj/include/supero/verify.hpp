// Property suites behind `verify`: each re-checks one structural invariant
// over a fixed grid and reports pass/fail with a one-line summary.
#pragma once

#include <string>
#include <vector>

namespace supero {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// linkage-oracle, flag-invariants, certified-bounds, rep-dimensions,
// weyl-invariance; in this order
std::vector<SuiteResult> run_property_suites();

}  // namespace supero
