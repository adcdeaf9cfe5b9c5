#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nilmult {

// Everything a CLI invocation decides. The tool's main() only translates
// flags into this and prints the result, so every command is testable as a
// pure call.
struct RunConfig {
  std::string command;  // compute | classify | catalog | verify | bounds | table

  // compute / classify input: exactly one of these
  std::string catalog_spec;
  std::string file;

  int c_nil = 2;
  std::optional<int> class_hint;
  bool json = false;

  std::vector<long> primes = {2, 3};  // catalog
  int max_n = 4;                      // catalog

  std::string only;  // verify: run a single check group

  long bound_n = 0, bound_m = 0;  // bounds
  long table_p = 0, table_n = 0;  // table
};

struct RunResult {
  int exit_code = 0;
  std::string output;  // full text, newline terminated
};

// Exit codes: 0 success, 1 verification mismatch, 2 parse error,
// 3 unsupported input, 4 internal assertion, 5 classification
// counterexample, 6 abelian input to classify.
RunResult run_command(const RunConfig& cfg);

}  // namespace nilmult
