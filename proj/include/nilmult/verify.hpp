#pragma once

#include <string>
#include <vector>

namespace nilmult {

// One row of the verification table. `pass` is exact agreement for value
// rows and the stated comparison for bound rows; `expected` and `computed`
// are the rendered sides either way.
struct CheckResult {
  std::string group;
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0;  // time spent computing this row's fresh work
};

// Registry groups in their fixed execution order.
const std::vector<std::string>& check_groups();

// Runs every group, or just the named one. Rows come back in a fixed
// deterministic order; repeated analyses are cached within one call.
// Unknown group names raise UnsupportedError.
std::vector<CheckResult> run_checks(const std::string& only = "");

}  // namespace nilmult
