#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nilmult/errors.hpp"

namespace nilmult {

using Int = mpz_class;

// Dense row-major matrix over Z. Zero rows or columns are allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

// u * m * v == d with u, v unimodular and d diagonal, diagonal entries
// nonnegative, each dividing the next, zeros trailing.
struct SmithResult {
  IntMatrix d, u, v;
};

// Pivot choice is fixed (smallest nonzero absolute value, ties by lowest row
// then column index) so results are deterministic across runs.
SmithResult smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group in invariant-factor form: divisors
// ascending, each >= 2 and dividing the next, plus a free rank.
struct AbelianGroup {
  std::vector<Int> divisors;
  int rank0 = 0;

  bool trivial() const { return divisors.empty() && rank0 == 0; }
  bool finite() const { return rank0 == 0; }
  Int order() const;  // requires finite()
  std::string str() const;
  bool operator==(const AbelianGroup& rhs) const = default;
};

// Z^ambient_rank modulo the row space of `relations`.
AbelianGroup cokernel_invariants(const IntMatrix& relations, int ambient_rank);

// Both arguments must be finite.
AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

// e with |a| = p^e. Raises InternalError if |a| is not a power of p; a
// non-p-power here always signals a pipeline bug upstream.
int order_exponent(const AbelianGroup& a, const Int& p);

}  // namespace nilmult
