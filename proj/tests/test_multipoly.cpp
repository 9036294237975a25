#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "minorsum/multipoly.hpp"
#include "minorsum/rational_function.hpp"
#include "minorsum/rng.hpp"

using namespace minorsum;

namespace {

MultiPoly var(std::size_t k, std::size_t i) { return MultiPoly::variable(k, i); }

// random sparse polynomial with up to max_terms terms, exponents < 4
MultiPoly random_poly(SeededRng& rng, std::size_t k, std::size_t max_terms) {
  MultiPoly p(k);
  std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    MultiPoly::Exponents e(k);
    for (std::size_t i = 0; i < k; ++i) e[i] = static_cast<unsigned>(rng.below(4));
    p.add_term(std::move(e), BigInt(rng.uniform_int(-9, 9)));
  }
  return p;
}

MultiPoly random_nonzero_poly(SeededRng& rng, std::size_t k, std::size_t max_terms) {
  for (;;) {
    MultiPoly p = random_poly(rng, k, max_terms);
    if (!p.is_zero()) return p;
  }
}

}  // namespace

TEST_CASE("polynomial arithmetic basics", "[multipoly]") {
  std::size_t k = 2;
  MultiPoly a1 = var(k, 0);
  MultiPoly a2 = var(k, 1);

  CHECK(a1 * a2 == a2 * a1);
  CHECK((a1 - a1).is_zero());
  CHECK((a2 - a1) * (a2 + a1) == a2 * a2 - a1 * a1);
  CHECK(MultiPoly::zero(k) + a1 == a1);
  CHECK(MultiPoly::one(k) * a2 == a2);
}

TEST_CASE("mismatched variable counts are rejected", "[multipoly]") {
  CHECK_THROWS_AS(var(2, 0) + var(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(var(2, 0) * var(3, 0), std::invalid_argument);
}

TEST_CASE("zero substitution", "[multipoly]") {
  std::size_t k = 2;
  MultiPoly a1 = var(k, 0);
  MultiPoly a2 = var(k, 1);

  // a1*a2 + a2^2 with a1 := 0 leaves a2^2
  MultiPoly p = a1 * a2 + a2 * a2;
  CHECK(p.substitute_zero(0) == a2 * a2);

  // substituting an absent variable changes nothing
  MultiPoly q = a2 * a2 + a2;
  CHECK(q.substitute_zero(0) == q);

  CHECK((a2 - a1).substitute_zero(0) == a2);
  CHECK_THROWS_AS(p.substitute_zero(5), std::invalid_argument);
}

TEST_CASE("substitution at zero is multiplicative", "[multipoly][property]") {
  constexpr int kTrials = 100;
  SeededRng rng(7);
  for (int t = 0; t < kTrials; ++t) {
    std::size_t k = 1 + rng.below(5);
    MultiPoly p = random_poly(rng, k, 10);
    MultiPoly q = random_poly(rng, k, 10);
    std::size_t i = rng.below(k);
    CHECK((p * q).substitute_zero(i) == p.substitute_zero(i) * q.substitute_zero(i));
  }
}

TEST_CASE("ring axioms on random sparse polynomials", "[multipoly][property]") {
  constexpr int kTrials = 100;
  SeededRng rng(11);
  for (int t = 0; t < kTrials; ++t) {
    std::size_t k = 1 + rng.below(5);
    MultiPoly p = random_poly(rng, k, 20);
    MultiPoly q = random_poly(rng, k, 20);
    MultiPoly r = random_poly(rng, k, 20);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("termwise variable division", "[multipoly]") {
  std::size_t k = 2;
  MultiPoly a1 = var(k, 0);
  MultiPoly a2 = var(k, 1);
  MultiPoly p = a1 * a2 * (a1 + a2);  // a1^2 a2 + a1 a2^2
  REQUIRE(p.divisible_by_variable(0));
  CHECK(p.divided_by_variable(0) == a2 * (a1 + a2));
  CHECK_FALSE((a1 + a2).divisible_by_variable(0));
  CHECK_THROWS_AS((a1 + a2).divided_by_variable(0), std::invalid_argument);
}

TEST_CASE("dropping an absent variable relabels the rest", "[multipoly]") {
  std::size_t k = 3;
  MultiPoly p = var(k, 1) * var(k, 2);  // a2*a3
  MultiPoly dropped = p.drop_variable(0);
  CHECK(dropped == var(2, 0) * var(2, 1));
  CHECK_THROWS_AS((var(k, 0) * var(k, 1)).drop_variable(0), std::invalid_argument);
}

TEST_CASE("polynomial evaluation", "[multipoly]") {
  std::size_t k = 2;
  MultiPoly p = var(k, 0) * var(k, 0) + var(k, 1);  // a1^2 + a2
  std::vector<Rational> point{Rational(3, 2), Rational(-1)};
  CHECK(p.evaluate(point) == Rational(5, 4));
}

TEST_CASE("debug serialization is lexicographic", "[multipoly]") {
  std::size_t k = 2;
  MultiPoly p = var(k, 1) * var(k, 1) - var(k, 0) * var(k, 1);  // -a1 a2 + a2^2
  CHECK(p.to_string() == "1*a2^2 + -1*a1^1*a2^1");
  CHECK(MultiPoly::zero(k).to_string() == "0");
  CHECK(MultiPoly::constant(k, 5).to_string() == "5");
}

TEST_CASE("rational function equality by cross-multiplication", "[ratfun]") {
  std::size_t k = 2;
  MultiPoly a1 = var(k, 0);
  MultiPoly a2 = var(k, 1);

  RationalFunction f(a1, a1 * a1);                    // a1 / a1^2
  RationalFunction g(MultiPoly::one(k), a1);          // 1 / a1
  CHECK(ratfun_equal(f, g));

  RationalFunction h(MultiPoly::one(k), a2);          // 1 / a2
  CHECK_FALSE(ratfun_equal(g, h));

  // multiplying numerator and denominator by a1 changes nothing
  MultiPoly num = a2 - a1;
  MultiPoly den = a1 * a2 * (a1 + a2);
  RationalFunction base(num, den);
  RationalFunction rescaled(num * a1, den * a1);
  CHECK(ratfun_equal(base, rescaled));
}

TEST_CASE("rational function equality is an equivalence relation", "[ratfun][property]") {
  constexpr int kTrials = 60;
  SeededRng rng(13);
  for (int t = 0; t < kTrials; ++t) {
    std::size_t k = 1 + rng.below(4);
    MultiPoly p = random_poly(rng, k, 8);
    MultiPoly q = random_nonzero_poly(rng, k, 8);
    MultiPoly r = random_nonzero_poly(rng, k, 4);
    MultiPoly s = random_nonzero_poly(rng, k, 4);
    RationalFunction f(p, q);
    RationalFunction g(p * r, q * r);
    RationalFunction h(p * s, q * s);
    CHECK(ratfun_equal(f, f));
    CHECK(ratfun_equal(f, g));
    CHECK(ratfun_equal(g, f));
    // transitivity across two independent rescalings
    CHECK(ratfun_equal(g, h));
  }
}

TEST_CASE("rational function arithmetic and guards", "[ratfun]") {
  std::size_t k = 1;
  MultiPoly a1 = var(k, 0);
  RationalFunction inv(MultiPoly::one(k), a1);
  RationalFunction sum = inv + inv;
  CHECK(ratfun_equal(sum, RationalFunction(MultiPoly::constant(k, 2), a1)));
  CHECK(ratfun_equal(inv * inv, RationalFunction(MultiPoly::one(k), a1 * a1)));
  CHECK((inv - inv).is_zero());
  CHECK_THROWS_AS(RationalFunction(a1, MultiPoly::zero(k)), std::invalid_argument);
}

TEST_CASE("scaling by a variable cancels into the denominator when possible", "[ratfun]") {
  std::size_t k = 2;
  MultiPoly a1 = var(k, 0);
  MultiPoly a2 = var(k, 1);
  RationalFunction entry(a2 - a1, a1 * a2 * (a1 + a2));
  RationalFunction scaled = entry.scaled_by_variable(0);
  // denominator was termwise divisible by a1, so it cancels and the a1 := 0
  // substitution stays regular
  CHECK(scaled.den() == a2 * (a1 + a2));
  RationalFunction at_zero = scaled.substitute_zero(0);
  CHECK(ratfun_equal(at_zero, RationalFunction(a2, a2 * a2)));

  // substituting without the scaling kills the denominator
  CHECK_THROWS_AS(entry.substitute_zero(0), std::logic_error);

  // numerator picks up the factor when the denominator has no a1
  RationalFunction plain(a2 - a1, a2);
  CHECK(plain.scaled_by_variable(0).num() == (a2 - a1) * a1);
}

TEST_CASE("rational function evaluation", "[ratfun]") {
  std::size_t k = 2;
  MultiPoly a1 = var(k, 0);
  MultiPoly a2 = var(k, 1);
  RationalFunction entry(a2 - a1, a1 * a2 * (a1 + a2));
  std::vector<Rational> point{Rational(1), Rational(2)};
  CHECK(entry.evaluate(point) == Rational(1, 6));
  std::vector<Rational> singular{Rational(0), Rational(2)};
  CHECK_THROWS_AS(entry.evaluate(singular), std::domain_error);
}
