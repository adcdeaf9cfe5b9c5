#include "nilmult/baer.hpp"

#include "doctest.h"
#include "nilmult/errors.hpp"

using namespace nilmult;

namespace {

const char* kD8 = "gens a b\nrel a^4\nrel b^2\nrel [a,b]a^2\n";
const char* kQ8 = "gens a b\nrel a^4\nrel b^2 a^-2\nrel [a,b]a^2\n";
const char* kD16 = "gens a b\nrel a^8\nrel b^2\nrel [a,b]a^2\n";

std::string heisenberg(int p) {
  std::string ps = std::to_string(p);
  return "gens a b\nrel a^" + ps + "\nrel b^" + ps + "\nrel [a,b]^" + ps +
         "\nrel [[a,b],a]\nrel [[a,b],b]\n";
}

std::string modular_p3(int p) {
  std::string ps = std::to_string(p);
  return "gens a b\nrel a^" + std::to_string(p * p) + "\nrel b^" + ps +
         "\nrel [a,b]a^" + ps + "\n";
}

MultiplierReport run(const std::string& text, AnalyzeOptions opt = {}) {
  return analyze(parse_presentation(text), opt);
}

}  // namespace

TEST_CASE("order 8 landmarks") {
  MultiplierReport d8 = run(kD8);
  CHECK(d8.prime == 2);
  CHECK(d8.n == 3);
  CHECK(d8.order == 8);
  CHECK(d8.nil_class == 2);
  CHECK(d8.abelianization.divisors == std::vector<Int>{2, 2});
  CHECK(d8.derived_exponent == 1);
  CHECK(d8.multiplier.divisors == std::vector<Int>{2, 4});
  CHECK(d8.mult_exponent == 3);
  CHECK(d8.s2 == 2);

  MultiplierReport q8 = run(kQ8);
  CHECK(q8.n == 3);
  CHECK(q8.nil_class == 2);
  CHECK(q8.abelianization.divisors == std::vector<Int>{2, 2});
  CHECK(q8.multiplier.divisors == std::vector<Int>{2, 2});
  CHECK(q8.mult_exponent == 2);
  CHECK(q8.s2 == 3);
}

TEST_CASE("order p^3 landmarks, odd p") {
  for (int p : {3, 5}) {
    MultiplierReport h = run(heisenberg(p));
    CHECK(h.prime == p);
    CHECK(h.n == 3);
    CHECK(h.nil_class == 2);
    CHECK(h.multiplier.divisors == std::vector<Int>(5, p));
    CHECK(h.mult_exponent == 5);
    CHECK(h.s2 == 0);

    MultiplierReport m = run(modular_p3(p));
    CHECK(m.n == 3);
    CHECK(m.abelianization.divisors == std::vector<Int>{p, p});
    CHECK(m.multiplier.divisors == std::vector<Int>{p, p});
    CHECK(m.s2 == 3);
  }
}

TEST_CASE("classical multiplier via c_nil = 1") {
  AnalyzeOptions schur;
  schur.c_nil = 1;

  MultiplierReport d8 = run(kD8, schur);
  CHECK(d8.multiplier.divisors == std::vector<Int>{2});
  CHECK(d8.mult_exponent == 1);
  CHECK(!d8.s2.has_value());

  CHECK(run(kQ8, schur).multiplier.trivial());
  CHECK(run(heisenberg(3), schur).multiplier.divisors ==
        std::vector<Int>{3, 3});
}

TEST_CASE("class 3 group") {
  MultiplierReport d16 = run(kD16);
  CHECK(d16.n == 4);
  CHECK(d16.nil_class == 3);
  CHECK(d16.cutoff == 5);
  CHECK(d16.abelianization.divisors == std::vector<Int>{2, 2});
  CHECK(d16.derived_exponent == 2);
  // the general ceiling still applies
  CHECK(d16.mult_exponent <= 11);
  CHECK(d16.s2.has_value());

  // an undershot hint is corrected transparently
  AnalyzeOptions low;
  low.class_hint = 2;
  MultiplierReport again = run(kD16, low);
  CHECK(again.nil_class == 3);
  CHECK(again.cutoff == 5);
  CHECK(again.multiplier == d16.multiplier);

  // class 3 is out of reach for the classical multiplier's truncation
  AnalyzeOptions schur;
  schur.c_nil = 1;
  CHECK_THROWS_AS(run(kD16, schur), UnsupportedError);
}

TEST_CASE("results do not depend on the truncation slack") {
  AnalyzeOptions tight;
  tight.class_hint = 2;
  AnalyzeOptions loose;
  loose.class_hint = 3;
  MultiplierReport a = run(kD8, tight);
  MultiplierReport b = run(kD8, loose);
  CHECK(a.cutoff == 4);
  CHECK(b.cutoff == 5);
  CHECK(a.multiplier == b.multiplier);
  CHECK(a.s2 == b.s2);
  // and the hintless probe agrees
  CHECK(run(kD8).multiplier == a.multiplier);
}

TEST_CASE("abelian groups") {
  MultiplierReport z4 = run("gens a\nrel a^4\n");
  CHECK(z4.n == 2);
  CHECK(z4.nil_class == 1);
  CHECK(z4.multiplier.trivial());
  CHECK(!z4.s2.has_value());
  CHECK(z4.derived_exponent == 0);

  MultiplierReport v4 = run("gens a b\nrel a^2\nrel b^2\nrel [a,b]\n");
  CHECK(v4.multiplier.divisors == std::vector<Int>{2, 2});
  CHECK(!v4.s2.has_value());

  AnalyzeOptions schur;
  schur.c_nil = 1;
  CHECK(run("gens a b\nrel a^2\nrel b^2\nrel [a,b]\n", schur)
            .multiplier.divisors == std::vector<Int>{2});
}

TEST_CASE("out of scope inputs") {
  // free and free abelian groups are infinite
  CHECK_THROWS_AS(run("gens a b\nrel [a,b]\n"), UnsupportedError);
  CHECK_THROWS_WITH_AS(run("gens a\nrel a^6\n"),
                       doctest::Contains("not a prime power"),
                       UnsupportedError);
  CHECK_THROWS_WITH_AS(run("gens a b\nrel a^2\nrel b^3\nrel [a,b]\n"),
                       doctest::Contains("not a prime power"),
                       UnsupportedError);  // Z6 on two generators

  // a presentation of a non-nilpotent group quietly collapses to its
  // nilpotent quotient; here S3 shows up as Z2
  MultiplierReport s3 = run("gens a b\nrel a^3\nrel b^2\nrel [a,b]a^2\n");
  CHECK(s3.order == 2);
  CHECK(s3.nil_class == 1);
  CHECK_THROWS_WITH_AS(run("gens a\nrel a\n"), doctest::Contains("trivial"),
                       UnsupportedError);

  AnalyzeOptions bad;
  bad.c_nil = 3;
  CHECK_THROWS_AS(run(kD8, bad), UnsupportedError);

  AnalyzeOptions high;
  high.class_hint = 4;
  CHECK_THROWS_AS(run(kD8, high), UnsupportedError);

  // five generators with no hint
  CHECK_THROWS_WITH_AS(
      run("gens a b c d e\nrel a^2\nrel b^2\nrel c^2\nrel d^2\nrel e^2\n"),
      doctest::Contains("class hint"), UnsupportedError);

  // nilpotent but the class is too high even for c_nil = 2
  CHECK_THROWS_AS(run("gens a b\nrel a^16\nrel b^2\nrel [a,b]a^2\n"),
                  UnsupportedError);  // dihedral of order 32, class 4
}
