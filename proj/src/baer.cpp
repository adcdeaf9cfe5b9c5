#include "nilmult/baer.hpp"

#include <memory>

#include "nilmult/errors.hpp"
#include "nilmult/formulas.hpp"

namespace nilmult {

namespace {

// Everything tied to one truncation degree.
struct Build {
  std::unique_ptr<LyndonBasis> basis;
  std::vector<GroupElement> ambient;
  SubgroupTable rbar;
  int nil_class;  // as seen at this truncation, so capped at K
};

Build make_build(const Presentation& pres, int d, int K) {
  auto basis = std::make_unique<LyndonBasis>(d, K);
  std::vector<GroupElement> ambient;
  for (int i = 0; i < d; ++i) ambient.push_back(embed_generator(i, d, K));
  std::vector<GroupElement> images;
  for (const Word& w : pres.relators) images.push_back(eval_word(w, d, K));
  SubgroupTable rbar = normal_closure(images, ambient, *basis);

  // relators swallow every basis commutator of weight above the class
  int nil_class = 1;
  for (int w = 2; w <= K; ++w) {
    bool all_in = true;
    for (int i = basis->first_of_weight(w);
         i < basis->first_of_weight(w + 1); ++i)
      if (!rbar.contains(basis->elem(i))) {
        all_in = false;
        break;
      }
    if (!all_in) nil_class = w;
  }
  return Build{std::move(basis), std::move(ambient), std::move(rbar),
               nil_class};
}

// Smallest prime p with order = p^n, or UnsupportedError.
std::pair<Int, int> prime_power(const Int& order) {
  Int p = 0;
  if (mpz_even_p(order.get_mpz_t())) {
    p = 2;
  } else {
    for (Int c = 3; c * c <= order && c < 100000; c += 2)
      if (mpz_divisible_p(order.get_mpz_t(), c.get_mpz_t())) {
        p = c;
        break;
      }
    if (p == 0) {
      if (mpz_probab_prime_p(order.get_mpz_t(), 40) == 0)
        throw UnsupportedError("group order " + order.get_str() +
                               " is not a prime power");
      p = order;
    }
  }
  Int rem = order;
  int n = 0;
  while (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) {
    rem /= p;
    ++n;
  }
  if (rem != 1)
    throw UnsupportedError("group order " + order.get_str() +
                           " is not a prime power");
  return {p, n};
}

AbelianGroup abelianization_of(const Presentation& pres) {
  const int d = static_cast<int>(pres.generators.size());
  IntMatrix m(static_cast<int>(pres.relators.size()), d);
  for (size_t r = 0; r < pres.relators.size(); ++r)
    for (const Letter& l : pres.relators[r].letters)
      m.at(static_cast<int>(r), l.gen) += l.sign;
  return cokernel_invariants(m, d);
}

}  // namespace

MultiplierReport analyze(const Presentation& pres, const AnalyzeOptions& opt) {
  if (opt.c_nil != 1 && opt.c_nil != 2)
    throw UnsupportedError("c_nil must be 1 or 2");
  const int d = static_cast<int>(pres.generators.size());
  if (d < 1) throw UnsupportedError("no generators");
  if (d > kMaxGenerators)
    throw UnsupportedError("more than " + std::to_string(kMaxGenerators) +
                           " generators");

  // The degree-(c_nil+1) layer must stay abelian at the working
  // truncation, which caps the class we can serve.
  const int class_cap = opt.c_nil + 1;
  int K;
  if (opt.class_hint) {
    const int h = *opt.class_hint;
    if (h < 1) throw UnsupportedError("class hint below 1");
    if (h > class_cap)
      throw UnsupportedError(
          "nilpotency class " + std::to_string(h) + " exceeds " +
          std::to_string(class_cap) + " supported for c_nil=" +
          std::to_string(opt.c_nil));
    K = h + opt.c_nil;
  } else {
    if (d > 4)
      throw UnsupportedError(
          "a class hint is required for more than 4 generators");
    K = class_cap + opt.c_nil;
  }

  Build b = make_build(pres, d, K);
  if (b.nil_class > class_cap)
    throw UnsupportedError(
        "nilpotency class is at least " + std::to_string(b.nil_class) +
        ", above " + std::to_string(class_cap) + " supported for c_nil=" +
        std::to_string(opt.c_nil));
  if (b.nil_class + opt.c_nil > K) {
    // class hint undershot but the true class is still in range
    K = b.nil_class + opt.c_nil;
    b = make_build(pres, d, K);
  }

  MultiplierReport rep;
  rep.c_nil = opt.c_nil;
  rep.cutoff = K;
  rep.nil_class = b.nil_class;

  std::optional<Int> order = b.rbar.quotient_order();
  if (!order)
    throw UnsupportedError(
        "the presented group is infinite (or has an infinite nilpotent "
        "quotient)");
  if (*order == 1)
    throw UnsupportedError("the presented group is trivial");
  rep.order = *order;
  auto [p, n] = prime_power(*order);
  rep.prime = p;
  rep.n = n;

  rep.abelianization = abelianization_of(pres);
  if (!rep.abelianization.finite())
    throw InternalError("finite group with infinite abelianization");
  rep.derived_exponent = n - order_exponent(rep.abelianization, p);

  SubgroupTable tower = b.rbar;
  for (int step = 0; step < opt.c_nil; ++step)
    tower = commutator_with_ambient(tower, b.ambient);

  const int layer = opt.c_nil + 1;
  SubgroupTable tail = tail_intersection(b.rbar, layer);
  for (int i : tower.filled_slots()) {
    if (b.basis->weight(i) < layer)
      throw InternalError("commutator tower left the expected layer");
    if (!tail.contains(tower.entry(i)))
      throw InternalError("commutator tower escaped the relator subgroup");
  }

  rep.multiplier = abelian_section(tail, tower, layer);
  if (!rep.multiplier.finite())
    throw InternalError("multiplier of a finite group came out infinite");
  rep.mult_exponent = order_exponent(rep.multiplier, p);

  if (opt.c_nil == 2 && rep.nil_class >= 2)
    rep.s2 = static_cast<int>(cubic_base(n)) + 3 - rep.mult_exponent;
  return rep;
}

}  // namespace nilmult
