#include "nilmult/arith.hpp"

#include <algorithm>

namespace nilmult {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw InternalError("negative matrix dimension");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InternalError("matrix shape mismatch in mul");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (sgn(x) == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        if (sgn(rhs.at(k, j)) == 0) continue;
        mpz_addmul(out.at(i, j).get_mpz_t(), x.get_mpz_t(),
                   rhs.at(k, j).get_mpz_t());
      }
    }
  return out;
}

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row_i -= q * row_k
void row_sub(IntMatrix& m, int i, int k, const Int& q) {
  if (sgn(q) == 0) return;
  for (int c = 0; c < m.cols(); ++c)
    mpz_submul(m.at(i, c).get_mpz_t(), q.get_mpz_t(), m.at(k, c).get_mpz_t());
}

void col_sub(IntMatrix& m, int j, int k, const Int& q) {
  if (sgn(q) == 0) return;
  for (int r = 0; r < m.rows(); ++r)
    mpz_submul(m.at(r, j).get_mpz_t(), q.get_mpz_t(), m.at(r, k).get_mpz_t());
}

void negate_row(IntMatrix& m, int i) {
  for (int c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  const int r = m.rows(), c = m.cols();
  SmithResult res{m, IntMatrix::identity(r), IntMatrix::identity(c)};
  IntMatrix& a = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  const int stages = std::min(r, c);
  for (int k = 0; k < stages; ++k) {
    for (;;) {
      // Pivot: smallest nonzero |entry|, ties by lowest row then column.
      int pr = -1, pc = -1;
      for (int i = k; i < r; ++i)
        for (int j = k; j < c; ++j) {
          if (sgn(a.at(i, j)) == 0) continue;
          if (pr < 0 || mpz_cmpabs(a.at(i, j).get_mpz_t(),
                                   a.at(pr, pc).get_mpz_t()) < 0)
            pr = i, pc = j;
        }
      if (pr < 0) return res;  // remaining submatrix is zero
      swap_rows(a, k, pr), swap_rows(u, k, pr);
      swap_cols(a, k, pc), swap_cols(v, k, pc);
      if (sgn(a.at(k, k)) < 0) negate_row(a, k), negate_row(u, k);

      bool leftover = false;
      for (int i = k + 1; i < r; ++i) {
        if (sgn(a.at(i, k)) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(i, k).get_mpz_t(),
                   a.at(k, k).get_mpz_t());
        row_sub(a, i, k, q), row_sub(u, i, k, q);
        if (sgn(a.at(i, k)) != 0) leftover = true;  // remainder < pivot
      }
      for (int j = k + 1; j < c; ++j) {
        if (sgn(a.at(k, j)) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(k, j).get_mpz_t(),
                   a.at(k, k).get_mpz_t());
        col_sub(a, j, k, q), col_sub(v, j, k, q);
        if (sgn(a.at(k, j)) != 0) leftover = true;
      }
      if (leftover) continue;  // a strictly smaller pivot is now available

      // Row and column k are clear; make the pivot divide the interior.
      int bi = -1, bj = -1;
      for (int i = k + 1; i < r && bi < 0; ++i)
        for (int j = k + 1; j < c; ++j)
          if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), a.at(k, k).get_mpz_t())) {
            bi = i, bj = j;
            break;
          }
      if (bi < 0) break;
      // Pull the offending row into row k and re-reduce.
      for (int j2 = 0; j2 < c; ++j2) a.at(k, j2) += a.at(bi, j2);
      for (int j2 = 0; j2 < r; ++j2) u.at(k, j2) += u.at(bi, j2);
    }
  }
  return res;
}

namespace {

// Invariant-factor form: drop units, enforce d_i | d_{i+1} via gcd/lcm
// exchanges, sort ascending.
std::vector<Int> normalize_divisors(std::vector<Int> ds) {
  for (Int& d : ds) d = abs(d);
  std::erase_if(ds, [](const Int& d) { return d <= 1; });
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < ds.size(); ++i)
      for (size_t j = i + 1; j < ds.size(); ++j) {
        if (mpz_divisible_p(ds[j].get_mpz_t(), ds[i].get_mpz_t())) continue;
        Int g = gcd(ds[i], ds[j]);
        Int l = ds[i] / g * ds[j];
        ds[i] = g, ds[j] = l;
        changed = true;
      }
  }
  std::erase_if(ds, [](const Int& d) { return d <= 1; });
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace

Int AbelianGroup::order() const {
  if (rank0 != 0) throw InternalError("order() of an infinite abelian group");
  Int n = 1;
  for (const Int& d : divisors) n *= d;
  return n;
}

std::string AbelianGroup::str() const {
  if (trivial()) return "1";
  std::string s;
  for (int i = 0; i < rank0; ++i) {
    if (!s.empty()) s += " x ";
    s += "Z";
  }
  for (const Int& d : divisors) {
    if (!s.empty()) s += " x ";
    s += "Z" + d.get_str();
  }
  return s;
}

AbelianGroup cokernel_invariants(const IntMatrix& relations, int ambient_rank) {
  if (relations.cols() != ambient_rank)
    throw InternalError("relation matrix width != ambient rank");
  SmithResult s = smith_normal_form(relations);
  AbelianGroup g;
  int nonzero = 0;
  const int diag = std::min(relations.rows(), ambient_rank);
  for (int i = 0; i < diag; ++i) {
    const Int& d = s.d.at(i, i);
    if (sgn(d) == 0) continue;
    ++nonzero;
    if (d > 1) g.divisors.push_back(d);
  }
  g.rank0 = ambient_rank - nonzero;
  return g;
}

AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b) {
  if (!a.finite() || !b.finite())
    throw InternalError("tensor requires finite groups");
  std::vector<Int> ds;
  for (const Int& x : a.divisors)
    for (const Int& y : b.divisors) ds.push_back(gcd(x, y));
  return AbelianGroup{normalize_divisors(std::move(ds)), 0};
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Int> ds = a.divisors;
  ds.insert(ds.end(), b.divisors.begin(), b.divisors.end());
  return AbelianGroup{normalize_divisors(std::move(ds)), a.rank0 + b.rank0};
}

int order_exponent(const AbelianGroup& a, const Int& p) {
  if (!a.finite()) throw InternalError("order_exponent of an infinite group");
  int e = 0;
  for (const Int& d : a.divisors) {
    Int x = d;
    while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
      x /= p;
      ++e;
    }
    if (x != 1)
      throw InternalError("group order is not a power of " + p.get_str());
  }
  return e;
}

}  // namespace nilmult
