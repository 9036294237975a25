#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "minorsum/rational.hpp"
#include "minorsum/rng.hpp"

using namespace minorsum;

TEST_CASE("rational arithmetic on hand-checked values", "[rational]") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(-7, 4) * Rational(0) == Rational(0));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
}

TEST_CASE("division by zero raises an arithmetic error", "[rational]") {
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::overflow_error);
}

TEST_CASE("values are stored canonically reduced", "[rational]") {
  Rational x = make_rational(4, -6);
  CHECK(numerator(x) == -2);
  CHECK(denominator(x) == 3);
  CHECK(make_rational(0, 5) == Rational(0));
  CHECK(denominator(make_rational(0, 5)) == 1);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("rational literal parsing", "[rational]") {
  CHECK(parse_rational("5/6") == Rational(5, 6));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("4/6") == Rational(2, 3));  // reduction happens on construction
  CHECK(parse_rational("-1/2") == Rational(-1, 2));

  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("+5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
}

TEST_CASE("rational literal formatting is canonical", "[rational]") {
  CHECK(format_rational(Rational(5, 6)) == "5/6");
  CHECK(format_rational(Rational(-1, 2)) == "-1/2");
  CHECK(format_rational(Rational(7)) == "7");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(parse_rational("-10/4")) == "-5/2");
}

TEST_CASE("field axioms hold on random triples", "[rational][property]") {
  constexpr int kTrials = 200;
  SeededRng rng(42);
  for (int t = 0; t < kTrials; ++t) {
    Rational a = rng.rational(50, 20);
    Rational b = rng.rational(50, 20);
    Rational c = rng.rational(50, 20);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (a != 0) CHECK(a * (Rational(1) / a) == Rational(1));
  }
}
