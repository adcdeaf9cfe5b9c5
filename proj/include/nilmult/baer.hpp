#pragma once

#include <optional>

#include "nilmult/presentation.hpp"
#include "nilmult/subgroup.hpp"

namespace nilmult {

struct AnalyzeOptions {
  // 1 computes the classical multiplier, 2 the degree-2 one.
  int c_nil = 2;
  // Upper bound on the nilpotency class, if known. Without it the group
  // must have at most 4 generators so the probe truncation stays small.
  std::optional<int> class_hint;
};

struct MultiplierReport {
  Int prime;
  int n = 0;  // group order is prime^n
  Int order;
  int nil_class = 0;
  AbelianGroup abelianization;
  int derived_exponent = 0;  // log_prime of the derived subgroup order
  int c_nil = 2;
  AbelianGroup multiplier;
  int mult_exponent = 0;  // log_prime of the multiplier order
  // Defect below the ceiling; only defined for the degree-2 multiplier of
  // a non-abelian group.
  std::optional<int> s2;
  int cutoff = 0;  // truncation degree the final computation ran at
};

// Full pipeline: embed the presented group's free cover into the truncated
// ring, close the relator subgroup, read off order, class and
// abelianization, walk the commutator tower c_nil steps, and take the
// abelian section that the Hopf formula names. Raises UnsupportedError for
// groups outside scope (infinite, not of prime power order, class or
// generator count too large) and InternalError only for pipeline bugs.
MultiplierReport analyze(const Presentation& pres,
                         const AnalyzeOptions& opt = {});

}  // namespace nilmult
