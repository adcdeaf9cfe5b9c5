#include "nilmult/formulas.hpp"

#include "doctest.h"
#include "nilmult/errors.hpp"
#include "nilmult/magnus.hpp"

using namespace nilmult;

TEST_CASE("polynomial pins") {
  CHECK(cubic_base(2) == 0);
  CHECK(cubic_base(3) == 2);
  CHECK(cubic_base(4) == 8);
  CHECK(cubic_base(5) == 20);
  CHECK(cubic_base(6) == 40);

  CHECK(witt_weight3(1) == 0);
  CHECK(witt_weight3(2) == 2);
  CHECK(witt_weight3(3) == 8);
  CHECK(witt_weight3(4) == 20);

  // the closed form counts the weight-3 basis words
  for (int d = 2; d <= 4; ++d) {
    LyndonBasis b = lyndon_basis(d, 3);
    CHECK(b.first_of_weight(4) - b.first_of_weight(3) == witt_weight3(d));
  }
}

TEST_CASE("exponent bound") {
  CHECK(exponent_bound(5, 3) == 13);
  CHECK(exponent_bound(4, 1) == 11);
  CHECK(exponent_bound(3, 1) == 5);
  CHECK(exponent_bound(3, 2) == 4);

  // m = 1 collapses to the general non-abelian ceiling
  for (long n = 2; n <= 12; ++n)
    CHECK(exponent_bound(n, 1) == cubic_base(n) + 3);

  // divisibility holds across the whole supported window
  for (long n = 2; n <= 12; ++n)
    for (long m = 1; m < n; ++m) CHECK_NOTHROW(exponent_bound(n, m));

  CHECK_THROWS_AS(exponent_bound(4, 0), InternalError);
  CHECK_THROWS_AS(exponent_bound(4, 4), InternalError);

  CHECK(large_derived_ceiling(5) == 18);
  CHECK(order_p2_derived_ceiling(5) == 21);
}

TEST_CASE("extraspecial multiplier") {
  AbelianGroup m2 = extraspecial_multiplier(2, 2);
  CHECK(m2.divisors == std::vector<Int>(20, 2));
  CHECK(m2.rank0 == 0);
  CHECK(extraspecial_multiplier(3, 3).divisors == std::vector<Int>(70, 3));
  CHECK_THROWS_AS(extraspecial_multiplier(2, 1), InternalError);
}

TEST_CASE("product multiplier pins") {
  const AbelianGroup z2{{2}, 0};
  const AbelianGroup z3{{3}, 0};
  const AbelianGroup v4{{2, 2}, 0};
  const AbelianGroup e9{{3, 3}, 0};

  // dihedral of order 8 times Z2
  AbelianGroup d8xz2 = product_multiplier({{2, 4}, 0}, v4, {}, z2);
  CHECK(d8xz2.divisors == std::vector<Int>{2, 2, 2, 2, 2, 2, 2, 4});

  // quaternion times Z2
  AbelianGroup q8xz2 = product_multiplier({{2, 2}, 0}, v4, {}, z2);
  CHECK(q8xz2.divisors == std::vector<Int>(8, 2));

  // exponent-3 extraspecial of order 27 times Z3
  AbelianGroup e1xz3 =
      product_multiplier({std::vector<Int>(5, 3), 0}, e9, {}, z3);
  CHECK(e1xz3.divisors == std::vector<Int>(11, 3));

  // exponent-9 extraspecial of order 27 times Z3
  AbelianGroup m27xz3 = product_multiplier({{3, 3}, 0}, e9, {}, z3);
  CHECK(m27xz3.divisors == std::vector<Int>(8, 3));

  // symmetric in the two factors
  CHECK(product_multiplier({{2, 4}, 0}, v4, {}, z2) ==
        product_multiplier({}, z2, {{2, 4}, 0}, v4));
}

TEST_CASE("abelian multiplier") {
  CHECK(abelian_multiplier({{4}, 0}).trivial());
  CHECK(abelian_multiplier({}).trivial());
  CHECK(abelian_multiplier({{2, 4}, 0}).divisors == std::vector<Int>{2, 2});
  CHECK(abelian_multiplier({{4, 4}, 0}).divisors == std::vector<Int>{4, 4});
  for (int r = 1; r <= 4; ++r) {
    AbelianGroup e{std::vector<Int>(r, 3), 0};
    AbelianGroup m = abelian_multiplier(e);
    CHECK(m.divisors == std::vector<Int>(witt_weight3(r), 3));
  }
}

TEST_CASE("classification by defect") {
  Classification c = classify(2, 4, 12);
  CHECK(c.kind == ClassKind::BoundViolation);
  CHECK(!c.s2.has_value());

  c = classify(2, 4, 11);
  CHECK(c.kind == ClassKind::Classified);
  CHECK(c.s2 == 0);
  CHECK(c.families == std::vector<std::string>{"E1xEA"});

  c = classify(2, 4, 10);
  CHECK(c.kind == ClassKind::Impossible);
  CHECK(c.s2 == 1);

  c = classify(2, 3, 3);
  CHECK(c.kind == ClassKind::Classified);
  CHECK(c.s2 == 2);
  CHECK(c.families == std::vector<std::string>{"D8xEA"});

  c = classify(3, 3, 3);
  CHECK(c.kind == ClassKind::Impossible);
  CHECK(c.s2 == 2);
  CHECK(c.note.find("p = 2") != std::string::npos);

  c = classify(2, 3, 2);
  CHECK(c.kind == ClassKind::Classified);
  CHECK(c.s2 == 3);
  CHECK(c.families == std::vector<std::string>{"HmxEA"});

  c = classify(3, 6, 40);
  CHECK(c.kind == ClassKind::Classified);
  CHECK(c.s2 == 3);
  CHECK(c.families == std::vector<std::string>{"HmxEA", "HmZp2xEA"});
  CHECK(c.note.find("1..2") != std::string::npos);

  c = classify(2, 3, 1);
  CHECK(c.kind == ClassKind::BeyondDefect3);
  CHECK(c.s2 == 4);

  CHECK_THROWS_AS(classify(2, 2, 1), InternalError);
  CHECK_THROWS_AS(classify(2, 4, -1), InternalError);
}
