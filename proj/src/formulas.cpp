#include "nilmult/formulas.hpp"

#include "nilmult/errors.hpp"

namespace nilmult {

long cubic_base(long n) {
  if (n < 0) throw InternalError("negative rank");
  return n * (n - 1) * (n - 2) / 3;
}

long witt_weight3(long n) {
  if (n < 0) throw InternalError("negative rank");
  return (n * n * n - n) / 3;
}

long exponent_bound(long n, long m) {
  if (m < 1 || m >= n)
    throw InternalError("derived exponent outside 1 <= m < n");
  const long num = (n - m) * ((n + 2 * m - 2) * (n - m - 1) + 3 * (m - 1));
  if (num % 3 != 0) throw InternalError("bound numerator not divisible by 3");
  return num / 3 + 3;
}

long large_derived_ceiling(long n) { return cubic_base(n) - 2; }

long order_p2_derived_ceiling(long n) { return cubic_base(n) + 1; }

AbelianGroup extraspecial_multiplier(const Int& p, long m) {
  if (m < 2)
    throw InternalError(
        "extraspecial multiplier formula needs m >= 2; the order p^3 cases "
        "differ per kind");
  const long rank = (8 * m * m * m - 2 * m) / 3;
  return AbelianGroup{std::vector<Int>(rank, p), 0};
}

AbelianGroup product_multiplier(const AbelianGroup& mult_g,
                                const AbelianGroup& ab_g,
                                const AbelianGroup& mult_h,
                                const AbelianGroup& ab_h) {
  AbelianGroup out = direct_sum(mult_g, mult_h);
  out = direct_sum(out, tensor(tensor(ab_g, ab_g), ab_h));
  out = direct_sum(out, tensor(tensor(ab_g, ab_h), ab_h));
  return out;
}

AbelianGroup abelian_multiplier(const AbelianGroup& g) {
  if (!g.finite()) throw InternalError("multiplier of an infinite group");
  AbelianGroup acc;       // trivial
  AbelianGroup acc_ab;    // running abelianization
  for (const Int& d : g.divisors) {
    AbelianGroup cyc{{d}, 0};
    acc = product_multiplier(acc, acc_ab, AbelianGroup{}, cyc);
    acc_ab = direct_sum(acc_ab, cyc);
  }
  return acc;
}

Classification classify(const Int& p, long n, long e) {
  if (n < 3) throw InternalError("no non-abelian group below order p^3");
  if (e < 0) throw InternalError("negative multiplier exponent");
  const long top = cubic_base(n) + 3;

  Classification c;
  if (e > top) {
    c.kind = ClassKind::BoundViolation;
    c.note = "exponent exceeds the ceiling " + std::to_string(top) +
             " for non-abelian groups of this order";
    return c;
  }
  c.s2 = top - e;
  switch (*c.s2) {
    case 0:
      c.kind = ClassKind::Classified;
      c.families = {"E1xEA"};
      c.note =
          "exponent-p extraspecial of order p^3 times elementary abelian";
      break;
    case 1:
      c.kind = ClassKind::Impossible;
      c.note = "defect 1 is realized by no group";
      break;
    case 2:
      if (p == 2) {
        c.kind = ClassKind::Classified;
        c.families = {"D8xEA"};
        c.note = "dihedral of order 8 times elementary abelian";
      } else {
        c.kind = ClassKind::Impossible;
        c.note = "defect 2 requires p = 2";
      }
      break;
    case 3: {
      c.kind = ClassKind::Classified;
      c.families = {"HmxEA"};
      std::string ranges =
          "extraspecial rank m in 1.." + std::to_string((n - 1) / 2);
      if (n >= 4) {
        c.families.push_back("HmZp2xEA");
        ranges += " (direct factor) or 1.." + std::to_string((n - 2) / 2) +
                  " (amalgamated with Z_p^2)";
      }
      c.note = ranges +
               "; some characterizations ask for the extraspecial factor to "
               "have m >= 2";
      break;
    }
    default:
      c.kind = ClassKind::BeyondDefect3;
      c.note = "defect above 3 is outside the classified range";
      break;
  }
  return c;
}

}  // namespace nilmult
