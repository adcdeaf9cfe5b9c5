#pragma once

#include <optional>
#include <vector>

#include "nilmult/arith.hpp"
#include "nilmult/presentation.hpp"

namespace nilmult {

// Hard caps. Above these the truncated algebra is too large for exact desk
// computation, and nothing in the supported pipeline needs more.
constexpr int kMaxGenerators = 6;
constexpr int kMaxCutoff = 5;

// Element of the free associative ring on d noncommuting variables over Z,
// truncated above total degree K. Coefficients are dense in monomial rank
// order: all monomials of degree 0, then 1, ..., each degree block in
// lexicographic order. Group elements are the units with constant term 1;
// the free group embeds via generator -> 1 + x_i, and the image of the
// lower central series term gamma_w consists of the elements whose blocks
// below weight w vanish.
struct GroupElement {
  int d = 0;
  int K = 0;
  std::vector<Int> c;
  bool operator==(const GroupElement&) const = default;
};

// Monomial rank bookkeeping (shared by subgroup tables and tests).
int monomial_count(int d, int K);
int block_offset(int d, int w);  // rank of the first degree-w monomial

GroupElement one(int d, int K);
GroupElement embed_generator(int i, int d, int K);
GroupElement mul(const GroupElement& a, const GroupElement& b);
GroupElement inv(const GroupElement& g);
GroupElement pow(const GroupElement& g, const Int& e);
// g^-1 h^-1 g h
GroupElement comm(const GroupElement& g, const GroupElement& h);
GroupElement eval_word(const Word& w, int d, int K);

// First nonzero coefficient past the constant term, in rank order.
struct LeadingTerm {
  int rank;
  int weight;
  Int coeff;
};
std::optional<LeadingTerm> leading_term(const GroupElement& g);

// Lyndon words of length 1..K over d letters, sorted by (weight, lex), each
// realized as a nested group commutator via the standard right
// factorization. The realizations are triangular: elem[i] has coefficient 1
// on its own word, nothing below that weight, and within the weight nothing
// lexicographically earlier. That makes the exponent vector of any group
// element computable by leading-coefficient reads and back-division, which
// is exactly what extract_exponents does.
class LyndonBasis {
 public:
  LyndonBasis(int d, int K);

  int d() const { return d_; }
  int K() const { return K_; }
  int size() const { return static_cast<int>(words_.size()); }
  const std::vector<int>& word(int i) const { return words_[i]; }
  int weight(int i) const { return weight_[i]; }
  int rank(int i) const { return rank_[i]; }
  const GroupElement& elem(int i) const { return elem_[i]; }
  // Factor indices of the standard factorization; -1 for single letters.
  int left(int i) const { return left_[i]; }
  int right(int i) const { return right_[i]; }

  // Basis index owning a monomial rank, or -1 if the word is not Lyndon.
  int index_of_rank(int rank) const { return index_of_rank_[rank]; }
  // First basis index of the given weight (== size() past the last weight).
  int first_of_weight(int w) const { return first_of_weight_[w]; }

  // elem(i)^e, with the inverse cached; exponents here are small.
  GroupElement elem_pow(int i, const Int& e) const;

 private:
  int d_, K_;
  std::vector<std::vector<int>> words_;
  std::vector<int> weight_, rank_, left_, right_;
  std::vector<GroupElement> elem_, elem_inv_;
  std::vector<int> index_of_rank_;
  std::vector<int> first_of_weight_;
};

LyndonBasis lyndon_basis(int d, int K);

// Exponents (e_b) with g equal to the product of elem(b)^e_b in basis
// order. Unique; raises InternalError if g is not a unit of the expected
// shape (which would mean corrupted arithmetic upstream, never bad input).
std::vector<Int> extract_exponents(const GroupElement& g,
                                   const LyndonBasis& basis);

// Inverse of extract_exponents.
GroupElement rebuild(const std::vector<Int>& exponents,
                     const LyndonBasis& basis);

}  // namespace nilmult
