#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "minorsum/combinatorics.hpp"
#include "minorsum/determinant.hpp"
#include "minorsum/errors.hpp"
#include "minorsum/matrix.hpp"
#include "minorsum/pfaffian.hpp"

namespace minorsum {

inline constexpr std::uint64_t kMaxBruteForceSubsets = 1'000'000;

enum class MinorSumMethod { pfaffian_even, pfaffian_augmented_odd, brute_force };

template <typename F>
struct MinorSumReport {
  F value;
  MinorSumMethod method;
  std::optional<std::uint64_t> minor_count;  // set by the brute-force route
};

/// S_ij = sum over row pairs t<u of C_ti*C_uj - C_tj*C_ui, i.e. the sum of
/// all 2x2 minors of the column pair (i, j). Running column prefix sums
/// bring the cost to O(n*k^2) instead of the O(n^2*k^2) pairwise loop.
template <typename F>
SkewMatrix<F> build_S(const DenseMatrix<F>& c) {
  std::size_t n = c.rows();
  std::size_t k = c.cols();
  std::vector<F> upper(k * k, F(0));
  std::vector<F> prefix(k, F(0));  // column sums over rows < u
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        upper[i * k + j] = upper[i * k + j] + prefix[i] * c(u, j) - prefix[j] * c(u, i);
      }
    }
    for (std::size_t i = 0; i < k; ++i) prefix[i] = prefix[i] + c(u, i);
  }
  return SkewMatrix<F>::from_upper(
      k, [&](std::size_t i, std::size_t j) { return upper[i * k + j]; });
}

template <typename F>
std::vector<F> column_sums(const DenseMatrix<F>& c) {
  std::vector<F> sums(c.cols(), F(0));
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) sums[j] = sums[j] + c(i, j);
  return sums;
}

/// Borders a k-dim skew matrix (k odd) with a zeroth row and column holding
/// the column sums: entry (0, j) = colsums[j-1], entry (j, 0) = -colsums[j-1].
template <typename F>
SkewMatrix<F> augment_odd(const SkewMatrix<F>& s, std::span<const F> colsums) {
  std::size_t k = s.dim();
  if (k % 2 == 0) throw std::invalid_argument("augmentation applies to odd dimension only");
  if (colsums.size() != k) throw std::invalid_argument("column sum count mismatch");
  return SkewMatrix<F>::from_upper(k + 1, [&](std::size_t i, std::size_t j) {
    if (i == 0) return colsums[j - 1];
    return s.at(i - 1, j - 1);
  });
}

/// Sum of all k-by-k minors of C as the Pfaffian of S (bordered by the
/// column sums when k is odd). Works for n < k too: S is then singular and
/// the Pfaffian vanishes along with the empty minor sum.
template <typename F>
MinorSumReport<F> minor_sum_okada(const DenseMatrix<F>& c) {
  SkewMatrix<F> s = build_S(c);
  if (c.cols() % 2 == 0) {
    return MinorSumReport<F>{pfaffian_eliminate(s), MinorSumMethod::pfaffian_even, std::nullopt};
  }
  std::vector<F> sums = column_sums(c);
  SkewMatrix<F> bordered = augment_odd(s, std::span<const F>(sums));
  return MinorSumReport<F>{pfaffian_eliminate(bordered), MinorSumMethod::pfaffian_augmented_odd,
                           std::nullopt};
}

/// Definitional route: enumerate every k-row subset and sum the exact
/// determinants. Guarded at C(n,k) <= 10^6 subsets.
template <typename F>
MinorSumReport<F> minor_sum_bruteforce(const DenseMatrix<F>& c) {
  std::size_t n = c.rows();
  std::size_t k = c.cols();
  if (k > n) return MinorSumReport<F>{F(0), MinorSumMethod::brute_force, 0};
  BigInt count = binomial(n, k);
  if (count > kMaxBruteForceSubsets)
    throw resource_limit_error("subset count exceeds the 10^6 brute-force guard; use minor_sum_okada");
  F total(0);
  std::uint64_t minors = 0;
  for_each_row_subset(n, k, [&](std::span<const std::size_t> rows) {
    total = total + determinant(c.pick_rows(rows));
    ++minors;
  });
  return MinorSumReport<F>{total, MinorSumMethod::brute_force, minors};
}

}  // namespace minorsum
