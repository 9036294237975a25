#include <cstddef>
#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "minorsum/combinatorics.hpp"
#include "minorsum/determinant.hpp"
#include "minorsum/matrix.hpp"
#include "minorsum/rng.hpp"

using namespace minorsum;

namespace {

DenseMatrix<Rational> random_rational_matrix(SeededRng& rng, std::size_t n) {
  return DenseMatrix<Rational>::build(
      n, n, [&](std::size_t, std::size_t) { return rng.rational(9, 5); });
}

// signature of the flattened pairing, computed independently by counting
// inversions
int signature_by_inversions(const PerfectMatchingPermutation& m) {
  std::vector<std::size_t> flat;
  for (auto [a, b] : m.pairing) {
    flat.push_back(a);
    flat.push_back(b);
  }
  int inversions = 0;
  for (std::size_t i = 0; i < flat.size(); ++i)
    for (std::size_t j = i + 1; j < flat.size(); ++j)
      if (flat[i] > flat[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("dense matrix shape checks", "[linalg]") {
  CHECK_THROWS_AS(DenseMatrix<Rational>(2, 2, std::vector<Rational>(3, Rational(0))),
                  std::invalid_argument);
  auto m = DenseMatrix<Rational>::from_rows({{1, 2}, {3, 4}});
  CHECK(m(1, 0) == Rational(3));
  CHECK(m.column(1) == std::vector<Rational>{Rational(2), Rational(4)});
}

TEST_CASE("determinant on fixed matrices", "[linalg]") {
  auto identity = DenseMatrix<Rational>::build(
      3, 3, [](std::size_t i, std::size_t j) { return Rational(i == j ? 1 : 0); });
  CHECK(determinant(identity) == Rational(1));

  auto m = DenseMatrix<Rational>::from_rows({{1, 2}, {3, 4}});
  CHECK(determinant(m) == Rational(-2));

  auto empty = DenseMatrix<Rational>(0, 0, {});
  CHECK(determinant(empty) == Rational(1));

  auto rect = DenseMatrix<Rational>(2, 3, std::vector<Rational>(6, Rational(1)));
  CHECK_THROWS_AS(determinant(rect), std::invalid_argument);
  CHECK_THROWS_AS(determinant_leibniz(rect), std::invalid_argument);
}

TEST_CASE("elimination determinant matches the Leibniz oracle", "[linalg][property]") {
  constexpr int kTrials = 40;
  SeededRng rng(3);
  for (int t = 0; t < kTrials; ++t) {
    auto m = random_rational_matrix(rng, 5);
    CHECK(determinant(m) == determinant_leibniz(m));
  }
}

TEST_CASE("fraction-free path agrees with the oracle on integer matrices", "[linalg][property]") {
  constexpr int kTrials = 40;
  SeededRng rng(5);
  for (int t = 0; t < kTrials; ++t) {
    auto m = random_integer_matrix(rng, 5, 5, 9);
    Rational det = determinant(m);
    CHECK(denominator(det) == 1);  // integer input, integer determinant
    CHECK(det == determinant_leibniz(m));
  }
}

TEST_CASE("floating determinant agrees with exact on integer input", "[linalg]") {
  SeededRng rng(8);
  auto exact = random_integer_matrix(rng, 6, 6, 4);
  auto approx = DenseMatrix<double>::build(
      6, 6, [&](std::size_t i, std::size_t j) { return to_double(exact(i, j)); });
  CHECK_THAT(determinant(approx),
             Catch::Matchers::WithinRel(to_double(determinant(exact)), 1e-9));
}

TEST_CASE("row subset enumeration", "[linalg]") {
  CHECK(all_row_subsets(3, 2) ==
        std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(all_row_subsets(4, 4) == std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}});
  CHECK(all_row_subsets(8, 4).size() == 70);
  CHECK(all_row_subsets(3, 0) == std::vector<std::vector<std::size_t>>{{}});
  CHECK_THROWS_AS(all_row_subsets(2, 3), std::invalid_argument);

  // lexicographic order, no duplicates
  auto subsets = all_row_subsets(7, 3);
  CHECK(subsets.size() == 35);
  for (std::size_t i = 1; i < subsets.size(); ++i) CHECK(subsets[i - 1] < subsets[i]);
}

TEST_CASE("binomial coefficients", "[linalg]") {
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(50, 25) == BigInt("126410606437752"));
}

TEST_CASE("perfect matching enumeration", "[linalg]") {
  // dim 4: the three matchings behind s12*s34 - s13*s24 + s14*s23
  auto matchings = all_perfect_matchings(4);
  REQUIRE(matchings.size() == 3);
  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(matchings[0].pairing == Pairs{{0, 1}, {2, 3}});
  CHECK(matchings[0].sign == 1);
  CHECK(matchings[1].pairing == Pairs{{0, 2}, {1, 3}});
  CHECK(matchings[1].sign == -1);
  CHECK(matchings[2].pairing == Pairs{{0, 3}, {1, 2}});
  CHECK(matchings[2].sign == 1);

  CHECK(all_perfect_matchings(0).size() == 1);
  CHECK(all_perfect_matchings(0).front().pairing.empty());
  CHECK_THROWS_AS(all_perfect_matchings(3), std::invalid_argument);
}

TEST_CASE("matching count is the double factorial", "[linalg][property]") {
  // (2m-1)!! terms at dim 2m
  CHECK(all_perfect_matchings(2).size() == 1);
  CHECK(all_perfect_matchings(6).size() == 15);
  CHECK(all_perfect_matchings(8).size() == 105);
  std::size_t count = 0;
  for_each_perfect_matching(10, [&](const auto&, int) { ++count; });
  CHECK(count == 945);
}

TEST_CASE("matchings satisfy the normal form and signature", "[linalg][property]") {
  for (std::size_t dim : {2u, 4u, 6u, 8u}) {
    for (const auto& m : all_perfect_matchings(dim)) {
      REQUIRE(m.pairing.size() == dim / 2);
      for (std::size_t p = 0; p < m.pairing.size(); ++p) {
        CHECK(m.pairing[p].first < m.pairing[p].second);
        if (p > 0) CHECK(m.pairing[p - 1].first < m.pairing[p].first);
      }
      CHECK(m.sign == signature_by_inversions(m));
    }
  }
}

TEST_CASE("skew matrix construction verifies and forces antisymmetry", "[linalg]") {
  std::vector<Rational> good{0, 2, -2, 0};
  auto s = SkewMatrix<Rational>::from_full(2, good);
  CHECK(s.at(0, 1) == Rational(2));
  CHECK(s.at(1, 0) == Rational(-2));
  CHECK(s.at(0, 0) == Rational(0));

  std::vector<Rational> bad{0, 2, 2, 0};
  CHECK_THROWS_AS(SkewMatrix<Rational>::from_full(2, bad), std::invalid_argument);
  std::vector<Rational> bad_diag{1, 2, -2, 0};
  CHECK_THROWS_AS(SkewMatrix<Rational>::from_full(2, bad_diag), std::invalid_argument);

  // floating tolerance: tiny asymmetry is forced clean, large rejected
  std::vector<double> nearly{0.0, 1.0, -1.0 + 1e-14, 0.0};
  auto sf = SkewMatrix<double>::from_full(2, nearly);
  CHECK(sf.at(1, 0) == -sf.at(0, 1));
  std::vector<double> off{0.0, 1.0, -0.9, 0.0};
  CHECK_THROWS_AS(SkewMatrix<double>::from_full(2, off), std::invalid_argument);
}
