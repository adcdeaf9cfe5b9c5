#include "nilmult/magnus.hpp"

#include <algorithm>
#include <map>

#include "nilmult/errors.hpp"

namespace nilmult {

namespace {

void check_shape(int d, int K) {
  if (d < 1 || d > kMaxGenerators)
    throw UnsupportedError("generator count " + std::to_string(d) +
                           " outside supported range 1.." +
                           std::to_string(kMaxGenerators));
  if (K < 1 || K > kMaxCutoff)
    throw UnsupportedError("truncation degree " + std::to_string(K) +
                           " outside supported range 1.." +
                           std::to_string(kMaxCutoff));
}

void check_same(const GroupElement& a, const GroupElement& b) {
  if (a.d != b.d || a.K != b.K)
    throw InternalError("mixed truncated-ring shapes");
}

void check_element(const GroupElement& g) {
  if (g.c.size() != static_cast<size_t>(monomial_count(g.d, g.K)))
    throw InternalError("coefficient vector has wrong length");
}

int pow_int(int d, int w) {
  int r = 1;
  while (w-- > 0) r *= d;
  return r;
}

}  // namespace

int monomial_count(int d, int K) { return block_offset(d, K + 1); }

int block_offset(int d, int w) {
  int r = 0, p = 1;
  for (int u = 0; u < w; ++u) {
    r += p;
    p *= d;
  }
  return r;
}

GroupElement one(int d, int K) {
  check_shape(d, K);
  GroupElement g{d, K, std::vector<Int>(monomial_count(d, K))};
  g.c[0] = 1;
  return g;
}

GroupElement embed_generator(int i, int d, int K) {
  if (i < 0 || i >= d)
    throw InternalError("generator index out of range");
  GroupElement g = one(d, K);
  g.c[block_offset(d, 1) + i] = 1;
  return g;
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  check_same(a, b);
  check_element(a);
  check_element(b);
  const int d = a.d, K = a.K;
  GroupElement out{d, K, std::vector<Int>(a.c.size())};
  for (int wa = 0; wa <= K; ++wa) {
    const int sa = block_offset(d, wa), na = pow_int(d, wa);
    for (int ia = 0; ia < na; ++ia) {
      const Int& ca = a.c[sa + ia];
      if (ca == 0) continue;
      for (int wb = 0; wb + wa <= K; ++wb) {
        const int sb = block_offset(d, wb), nb = pow_int(d, wb);
        // concatenating words concatenates base-d digit strings
        const int so = block_offset(d, wa + wb) + ia * nb;
        for (int ib = 0; ib < nb; ++ib) {
          const Int& cb = b.c[sb + ib];
          if (cb == 0) continue;
          mpz_addmul(out.c[so + ib].get_mpz_t(), ca.get_mpz_t(),
                     cb.get_mpz_t());
        }
      }
    }
  }
  return out;
}

GroupElement inv(const GroupElement& g) {
  check_element(g);
  if (g.c[0] != 1)
    throw InternalError("inverting a series without constant term 1");
  // (1+u)^-1 = 1 - u + u^2 - ...; u is nilpotent of index <= K+1
  GroupElement u = g;
  u.c[0] = 0;
  GroupElement res = one(g.d, g.K);
  GroupElement p = u;
  int sign = -1;
  for (int k = 1; k <= g.K; ++k) {
    for (size_t i = 0; i < res.c.size(); ++i) {
      if (sign > 0)
        res.c[i] += p.c[i];
      else
        res.c[i] -= p.c[i];
    }
    if (k < g.K) p = mul(p, u);
    sign = -sign;
  }
  return res;
}

GroupElement pow(const GroupElement& g, const Int& e) {
  check_element(g);
  if (e == 0) return one(g.d, g.K);
  GroupElement base = e < 0 ? inv(g) : g;
  Int n = abs(e);
  const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  GroupElement res = one(g.d, g.K);
  for (size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(n.get_mpz_t(), i)) res = mul(res, base);
    if (i + 1 < bits) base = mul(base, base);
  }
  return res;
}

GroupElement comm(const GroupElement& g, const GroupElement& h) {
  return mul(mul(inv(g), inv(h)), mul(g, h));
}

GroupElement eval_word(const Word& w, int d, int K) {
  GroupElement res = one(d, K);
  size_t i = 0;
  while (i < w.letters.size()) {
    const int gen = w.letters[i].gen;
    if (gen < 0 || gen >= d)
      throw InternalError("word uses a generator the ring does not have");
    long e = 0;
    size_t j = i;
    while (j < w.letters.size() && w.letters[j].gen == gen) {
      e += w.letters[j].sign;
      ++j;
    }
    res = mul(res, pow(embed_generator(gen, d, K), Int(e)));
    i = j;
  }
  return res;
}

std::optional<LeadingTerm> leading_term(const GroupElement& g) {
  check_element(g);
  int w = 1, next = block_offset(g.d, 2);
  for (size_t r = 1; r < g.c.size(); ++r) {
    while (static_cast<int>(r) >= next) {
      ++w;
      next = block_offset(g.d, w + 1);
    }
    if (g.c[r] != 0) return LeadingTerm{static_cast<int>(r), w, g.c[r]};
  }
  return std::nullopt;
}

namespace {

// Number of Lyndon words of length w over d letters (necklace-counting
// formula); used as a self-check on the enumeration.
long expected_lyndon_count(int d, int w) {
  static const std::map<int, std::vector<std::pair<int, int>>> divisors = {
      {1, {{1, 1}}},
      {2, {{1, 1}, {2, -1}}},
      {3, {{1, 1}, {3, -1}}},
      {4, {{1, 1}, {2, -1}, {4, 0}}},
      {5, {{1, 1}, {5, -1}}},
  };
  long sum = 0;
  for (auto [e, mu] : divisors.at(w)) sum += mu * pow_int(d, w / e);
  return sum / w;
}

}  // namespace

LyndonBasis::LyndonBasis(int d, int K) : d_(d), K_(K) {
  check_shape(d, K);

  // Duval's enumeration: every Lyndon word of length <= K, lex order.
  std::vector<std::vector<int>> lex;
  std::vector<int> w{0};
  while (!w.empty()) {
    lex.push_back(w);
    w.resize(K);
    for (size_t i = lex.back().size(); i < w.size(); ++i)
      w[i] = w[i - lex.back().size()];
    while (!w.empty() && w.back() == d - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::stable_sort(lex.begin(), lex.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     return a.size() < b.size();
                   });
  words_ = std::move(lex);

  const int n = size();
  weight_.resize(n);
  rank_.resize(n);
  left_.assign(n, -1);
  right_.assign(n, -1);
  index_of_rank_.assign(monomial_count(d, K), -1);
  first_of_weight_.assign(K + 2, n);
  std::map<std::vector<int>, int> index_of_word;

  for (int i = 0; i < n; ++i) {
    const auto& word = words_[i];
    const int wt = static_cast<int>(word.size());
    weight_[i] = wt;
    int r = block_offset(d, wt);
    int v = 0;
    for (int ch : word) v = v * d + ch;
    rank_[i] = r + v;
    index_of_rank_[rank_[i]] = i;
    if (first_of_weight_[wt] == n) first_of_weight_[wt] = i;
    index_of_word[word] = i;
  }
  for (int wt = K; wt >= 1; --wt)
    if (first_of_weight_[wt] == n) first_of_weight_[wt] = first_of_weight_[wt + 1];

  long per_weight = 0;
  for (int wt = 1; wt <= K; ++wt) {
    per_weight = 0;
    for (int i = 0; i < n; ++i)
      if (weight_[i] == wt) ++per_weight;
    if (per_weight != expected_lyndon_count(d, wt))
      throw InternalError("basis enumeration lost a word");
  }

  elem_.reserve(n);
  elem_inv_.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto& word = words_[i];
    if (word.size() == 1) {
      elem_.push_back(embed_generator(word[0], d, K));
    } else {
      // standard factorization: the right factor is the lex-least proper
      // suffix, which is itself Lyndon, as is the complementary prefix
      size_t cut = 1;
      for (size_t s = 2; s < word.size(); ++s) {
        if (std::lexicographical_compare(word.begin() + s, word.end(),
                                         word.begin() + cut, word.end()))
          cut = s;
      }
      std::vector<int> u(word.begin(), word.begin() + cut);
      std::vector<int> v(word.begin() + cut, word.end());
      left_[i] = index_of_word.at(u);
      right_[i] = index_of_word.at(v);
      elem_.push_back(comm(elem_[left_[i]], elem_[right_[i]]));
    }
    elem_inv_.push_back(inv(elem_.back()));
  }
}

GroupElement LyndonBasis::elem_pow(int i, const Int& e) const {
  if (e >= 0) return pow(elem_[i], e);
  return pow(elem_inv_[i], -e);
}

LyndonBasis lyndon_basis(int d, int K) { return LyndonBasis(d, K); }

std::vector<Int> extract_exponents(const GroupElement& g,
                                   const LyndonBasis& basis) {
  check_element(g);
  if (g.d != basis.d() || g.K != basis.K())
    throw InternalError("element shape does not match basis");
  if (g.c[0] != 1)
    throw InternalError("extracting exponents of a non-unit series");

  std::vector<Int> v(basis.size());
  GroupElement cur = g;
  for (int wt = 1; wt <= basis.K(); ++wt) {
    for (int i = basis.first_of_weight(wt); i < basis.first_of_weight(wt + 1);
         ++i) {
      Int e = cur.c[basis.rank(i)];
      if (e != 0) {
        cur = mul(basis.elem_pow(i, -e), cur);
        if (cur.c[basis.rank(i)] != 0)
          throw InternalError("basis division failed to clear a coordinate");
        v[i] = e;
      }
    }
    // dividing out every weight-wt basis element must kill the whole block
    const int lo = block_offset(g.d, wt), hi = block_offset(g.d, wt + 1);
    for (int r = lo; r < hi; ++r)
      if (cur.c[r] != 0)
        throw InternalError("residual after basis division; "
                            "element is not in the group image");
  }
  return v;
}

GroupElement rebuild(const std::vector<Int>& exponents,
                     const LyndonBasis& basis) {
  if (exponents.size() != static_cast<size_t>(basis.size()))
    throw InternalError("exponent vector has wrong length");
  GroupElement res = one(basis.d(), basis.K());
  for (int i = 0; i < basis.size(); ++i)
    if (exponents[i] != 0) res = mul(res, basis.elem_pow(i, exponents[i]));
  return res;
}

}  // namespace nilmult
