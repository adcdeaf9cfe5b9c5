#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilmult/baer.hpp"

namespace nilmult {

// Parsed form of a catalog spec string such as "d8",
// "cyclic:p=2,m=3", "elem_abelian:p=3,rank=2", "abelian:p=2,type=1.2",
// "extraspecial:p=3,m=2,kind=exp_p", "cpz:p=2,m=1,kind=quaternion" or
// "xEA:base=(q8),k=1".
struct FamilySpec {
  std::string family;
  long p = 0;
  long m = 0;             // cyclic exponent, extraspecial and cpz rank
  long rank = 0;          // elem_abelian rank, xEA tail count
  std::vector<long> type;  // abelian invariant exponents, ascending
  std::string kind;       // extraspecial and cpz flavor
  std::string base;       // xEA base spec text
  bool operator==(const FamilySpec&) const = default;
};

FamilySpec parse_family(const std::string& text);
std::string print_family(const FamilySpec& spec);

// A concrete presented group together with everything the catalog knows
// about it up front, so computations can be checked against declarations.
struct CatalogEntry {
  FamilySpec spec;
  Presentation presentation;
  AnalyzeOptions options;  // class hint preset, ready for analyze()

  Int p;
  int n = 0;  // order is p^n
  int nil_class = 0;
  AbelianGroup abelianization;
  // tag of the classification family this instance belongs to; empty for
  // abelian instances, which sit outside the classification
  std::string family_tag;

  long predicted_exponent = 0;  // log_p of the degree-2 multiplier order
  // full invariant factors when the closed form pins them
  std::optional<AbelianGroup> predicted_multiplier;

  // a designated central cyclic subgroup (generator word and order) whose
  // quotient is small; drives the central-quotient bound checks
  std::optional<Word> central_word;
  Int central_order = 1;
};

CatalogEntry build_family(const FamilySpec& spec);
CatalogEntry build_family(const std::string& text);

// Every catalog instance of order p^n with n <= max_n, for each prime, in
// a fixed deterministic order (by prime, then n, then family).
std::vector<FamilySpec> sweep(const std::vector<long>& primes, int max_n);

}  // namespace nilmult
