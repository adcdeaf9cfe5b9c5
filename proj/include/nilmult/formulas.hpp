#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilmult/arith.hpp"

namespace nilmult {

// n(n-1)(n-2)/3. For a non-abelian group of order p^n the exponent of the
// degree-2 multiplier is cubic_base(n) + 3 - s2 with defect s2 >= 0, so
// cubic_base(n) + 3 is the ceiling and s2 measures the distance below it.
long cubic_base(long n);

// (n^3 - n)/3: rank of the weight-3 layer of the free Lie ring on n
// letters (the Witt count), and the multiplier exponent of an elementary
// abelian group of rank n.
long witt_weight3(long n);

// Upper bound on the multiplier exponent of a group of order p^n with
// derived subgroup of order p^m, 1 <= m < n. Always an integer (the
// numerator is divisible by 3, checked internally).
long exponent_bound(long n, long m);

// Sharper ceilings for large derived subgroups: m >= 3 and m == 2.
long large_derived_ceiling(long n);
long order_p2_derived_ceiling(long n);

// Multiplier of an extraspecial group of order p^(2m+1), m >= 2:
// elementary abelian of rank (8m^3 - 2m)/3, independent of the kind.
// m == 1 is genuinely different per kind and is not covered here.
AbelianGroup extraspecial_multiplier(const Int& p, long m);

// Multiplier of a direct product from the factors' multipliers and
// abelianizations: M(GxH) = M(G) + M(H) + (Gab x Gab x Hab)
// + (Gab x Hab x Hab), all tensor products over Z.
AbelianGroup product_multiplier(const AbelianGroup& mult_g,
                                const AbelianGroup& ab_g,
                                const AbelianGroup& mult_h,
                                const AbelianGroup& ab_h);

// Multiplier of a finite abelian p-group, by folding cyclic factors
// through the product formula (cyclic groups have trivial multiplier).
AbelianGroup abelian_multiplier(const AbelianGroup& g);

enum class ClassKind {
  Classified,      // defect 0, 2 or 3: the realizing families are listed
  Impossible,      // no group fits; a witness would be a counterexample
  BoundViolation,  // exponent above the proven ceiling for any group
  BeyondDefect3,   // defect above 3: outside the classified range
};

struct Classification {
  ClassKind kind;
  std::optional<long> s2;
  // tags of the group families realizing this defect, empty when none do
  std::vector<std::string> families;
  std::string note;
  bool operator==(const Classification&) const = default;
};

// What a non-abelian group of order p^n whose multiplier exponent is e
// must look like. Requires n >= 3.
Classification classify(const Int& p, long n, long e);

}  // namespace nilmult
