#include "nilmult/magnus.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "nilmult/errors.hpp"

using namespace nilmult;

namespace {

// independent check: a word is Lyndon iff strictly smaller than all its
// proper rotations
bool lyndon_by_rotations(const std::vector<int>& w) {
  std::vector<int> r = w;
  for (size_t k = 1; k < w.size(); ++k) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    if (!std::lexicographical_compare(w.begin(), w.end(), r.begin(), r.end()))
      return false;
  }
  return true;
}

std::vector<std::vector<int>> lyndon_by_brute_force(int d, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(len);
  long total = 1;
  for (int i = 0; i < len; ++i) total *= d;
  for (long v = 0; v < total; ++v) {
    long x = v;
    for (int i = len - 1; i >= 0; --i) {
      w[i] = static_cast<int>(x % d);
      x /= d;
    }
    if (lyndon_by_rotations(w)) out.push_back(w);
  }
  return out;
}

GroupElement random_product(std::mt19937& rng, int d, int K, int length) {
  std::uniform_int_distribution<int> gen(0, d - 1);
  std::uniform_int_distribution<int> exp(-3, 3);
  GroupElement g = one(d, K);
  for (int i = 0; i < length; ++i)
    g = mul(g, pow(embed_generator(gen(rng), d, K), Int(exp(rng))));
  return g;
}

}  // namespace

TEST_CASE("monomial bookkeeping") {
  CHECK(monomial_count(2, 3) == 15);
  CHECK(monomial_count(2, 5) == 63);
  CHECK(monomial_count(3, 4) == 121);
  CHECK(monomial_count(1, 5) == 6);
  CHECK(block_offset(2, 0) == 0);
  CHECK(block_offset(2, 1) == 1);
  CHECK(block_offset(2, 2) == 3);
  CHECK(block_offset(2, 3) == 7);
  CHECK(block_offset(4, 2) == 5);
}

TEST_CASE("ring multiplication pins") {
  // [1+a, 1+b] = 1 + ab - ba up to degree 2
  GroupElement c2 = comm(embed_generator(0, 2, 2), embed_generator(1, 2, 2));
  CHECK(c2.c == std::vector<Int>{1, 0, 0, 0, 1, -1, 0});

  // (1+a)^4 = 1 + 4a + 6a^2 up to degree 2
  GroupElement b = pow(embed_generator(0, 2, 2), Int(4));
  CHECK(b.c == std::vector<Int>{1, 4, 0, 6, 0, 0, 0});

  GroupElement g = embed_generator(0, 2, 2);
  CHECK(mul(one(2, 2), g) == g);
  CHECK(mul(g, one(2, 2)) == g);
  CHECK(mul(g, inv(g)) == one(2, 2));
  CHECK(mul(inv(g), g) == one(2, 2));
  CHECK(pow(g, Int(-1)) == inv(g));
  CHECK(pow(g, Int(0)) == one(2, 2));
  CHECK(comm(g, g) == one(2, 2));
}

TEST_CASE("group laws on random products") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + trial % 3, K = 2 + trial % 3;
    GroupElement x = random_product(rng, d, K, 5);
    GroupElement y = random_product(rng, d, K, 5);
    GroupElement z = random_product(rng, d, K, 5);
    CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
    CHECK(mul(x, inv(x)) == one(d, K));
    CHECK(inv(inv(x)) == x);
    CHECK(inv(mul(x, y)) == mul(inv(y), inv(x)));
    CHECK(pow(x, Int(3)) == mul(x, mul(x, x)));
    CHECK(pow(x, Int(-2)) == inv(mul(x, x)));
    CHECK(mul(inv(y), mul(x, y)) == mul(x, comm(x, y)));
  }
}

TEST_CASE("word evaluation") {
  Presentation p = parse_presentation("gens a b\nrel [a,b]a^2\n");
  GroupElement g = eval_word(p.relators[0], 2, 3);
  // weight 1: exponent sums (2, 0); weight 2: ab - ba + aa
  CHECK(g.c[1] == 2);
  CHECK(g.c[2] == 0);
  CHECK(g.c[3] == 1);
  CHECK(g.c[4] == 1);
  CHECK(g.c[5] == -1);
  CHECK(g.c[6] == 0);

  // left-normed depth-2 commutator sits in weight >= 3
  Presentation q = parse_presentation("gens a b\nrel [[a,b],a]\n");
  GroupElement h = eval_word(q.relators[0], 2, 3);
  for (int r = 0; r < 7; ++r) CHECK(h.c[r] == (r == 0 ? 1 : 0));
  CHECK(leading_term(h).has_value());
  CHECK(leading_term(h)->weight == 3);

  CHECK(eval_word(Word{}, 2, 2) == one(2, 2));

  // unreduced input: a run whose signs cancel contributes nothing
  Word unreduced{{{0, 1}, {0, -1}, {1, 1}}};
  CHECK(eval_word(unreduced, 2, 3) == embed_generator(1, 2, 3));
}

TEST_CASE("leading term") {
  CHECK(!leading_term(one(2, 3)).has_value());
  auto t = leading_term(embed_generator(1, 2, 3));
  REQUIRE(t.has_value());
  CHECK(t->rank == 2);
  CHECK(t->weight == 1);
  CHECK(t->coeff == 1);
}

TEST_CASE("basis words: pinned list and brute-force counts") {
  LyndonBasis b = lyndon_basis(2, 3);
  REQUIRE(b.size() == 5);
  CHECK(b.word(0) == std::vector<int>{0});
  CHECK(b.word(1) == std::vector<int>{1});
  CHECK(b.word(2) == std::vector<int>{0, 1});
  CHECK(b.word(3) == std::vector<int>{0, 0, 1});
  CHECK(b.word(4) == std::vector<int>{0, 1, 1});
  CHECK(b.first_of_weight(1) == 0);
  CHECK(b.first_of_weight(2) == 2);
  CHECK(b.first_of_weight(3) == 3);
  CHECK(b.first_of_weight(4) == 5);
  CHECK(b.left(2) == 0);
  CHECK(b.right(2) == 1);
  CHECK(b.left(3) == 0);
  CHECK(b.right(3) == 2);  // aab = a . ab
  CHECK(b.left(4) == 2);
  CHECK(b.right(4) == 1);  // abb = ab . b
  CHECK(b.elem(2) == comm(embed_generator(0, 2, 3), embed_generator(1, 2, 3)));

  for (int d = 1; d <= 4; ++d) {
    const int K = d <= 2 ? 5 : (d == 3 ? 4 : 3);
    LyndonBasis basis = lyndon_basis(d, K);
    int at = 0;
    for (int w = 1; w <= K; ++w) {
      auto brute = lyndon_by_brute_force(d, w);
      for (const auto& word : brute) {
        REQUIRE(at < basis.size());
        CHECK(basis.word(at) == word);
        ++at;
      }
    }
    CHECK(at == basis.size());
  }
}

TEST_CASE("basis realizations are triangular") {
  for (auto [d, K] : {std::pair{2, 5}, {3, 4}, {4, 3}}) {
    LyndonBasis b = lyndon_basis(d, K);
    for (int i = 0; i < b.size(); ++i) {
      auto t = leading_term(b.elem(i));
      REQUIRE(t.has_value());
      CHECK(t->rank == b.rank(i));
      CHECK(t->weight == b.weight(i));
      CHECK(t->coeff == 1);
      CHECK(b.index_of_rank(b.rank(i)) == i);
    }
  }
}

TEST_CASE("exponent extraction: pinned") {
  LyndonBasis b = lyndon_basis(2, 3);
  GroupElement A = embed_generator(0, 2, 3);
  GroupElement B = embed_generator(1, 2, 3);

  CHECK(extract_exponents(mul(pow(A, Int(2)), pow(B, Int(3))), b) ==
        std::vector<Int>{2, 3, 0, 0, 0});
  // ba = ab [b,a], and [b,a] is exactly the inverse basis commutator
  CHECK(extract_exponents(mul(B, A), b) == std::vector<Int>{1, 1, -1, 0, 0});
  CHECK(extract_exponents(one(2, 3), b) == std::vector<Int>{0, 0, 0, 0, 0});
  CHECK(extract_exponents(comm(A, B), b) == std::vector<Int>{0, 0, 1, 0, 0});
}

TEST_CASE("exponent extraction: roundtrips") {
  std::mt19937 rng(77);
  for (auto [d, K] :
       {std::pair{1, 3}, {2, 3}, {2, 5}, {3, 4}, {4, 3}}) {
    LyndonBasis b = lyndon_basis(d, K);
    for (int trial = 0; trial < 20; ++trial) {
      GroupElement g = random_product(rng, d, K, 6);
      std::vector<Int> v = extract_exponents(g, b);
      CHECK(rebuild(v, b) == g);

      std::uniform_int_distribution<int> coord(-2, 2);
      std::vector<Int> w(b.size());
      for (auto& e : w) e = coord(rng);
      CHECK(extract_exponents(rebuild(w, b), b) == w);
    }
  }
}

TEST_CASE("shape and misuse errors") {
  CHECK_THROWS_AS(one(7, 3), UnsupportedError);
  CHECK_THROWS_AS(one(0, 3), UnsupportedError);
  CHECK_THROWS_AS(one(2, 6), UnsupportedError);
  CHECK_THROWS_AS(one(2, 0), UnsupportedError);
  CHECK_THROWS_AS(lyndon_basis(7, 3), UnsupportedError);
  CHECK_THROWS_AS(mul(one(2, 3), one(2, 4)), InternalError);
  CHECK_THROWS_AS(mul(one(2, 3), one(3, 3)), InternalError);

  GroupElement bad = one(2, 3);
  bad.c[0] = 2;
  CHECK_THROWS_AS(inv(bad), InternalError);
  CHECK_THROWS_AS(extract_exponents(bad, lyndon_basis(2, 3)), InternalError);
  CHECK_THROWS_AS(extract_exponents(one(2, 3), lyndon_basis(2, 4)),
                  InternalError);

  Presentation p = parse_presentation("gens a b c\nrel c\n");
  CHECK_THROWS_AS(eval_word(p.relators[0], 2, 3), InternalError);
}

TEST_CASE("single generator ring") {
  LyndonBasis b = lyndon_basis(1, 4);
  REQUIRE(b.size() == 1);
  GroupElement g = pow(embed_generator(0, 1, 4), Int(5));
  CHECK(extract_exponents(g, b) == std::vector<Int>{5});
  CHECK(g.c[1] == 5);
  CHECK(g.c[2] == 10);
  CHECK(g.c[3] == 10);
  CHECK(g.c[4] == 5);
}
