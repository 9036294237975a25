#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minorsum/rational.hpp"

namespace minorsum {

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= static_cast<std::uint64_t>(n - i);
    result /= static_cast<std::uint64_t>(i + 1);
  }
  return result;
}

/// Streams all strictly increasing k-subsets of {0..n-1} in lexicographic
/// order, each exactly once. fn receives a span over the current tuple.
template <typename Fn>
void for_each_row_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) throw std::invalid_argument("subset size exceeds ground set");
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  for (;;) {
    fn(std::span<const std::size_t>(subset));
    // advance to the lexicographic successor
    std::size_t pos = k;
    while (pos > 0 && subset[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++subset[pos - 1];
    for (std::size_t i = pos; i < k; ++i) subset[i] = subset[i - 1] + 1;
  }
}

inline std::vector<std::vector<std::size_t>> all_row_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for_each_row_subset(n, k, [&](std::span<const std::size_t> s) {
    out.emplace_back(s.begin(), s.end());
  });
  return out;
}

/// One perfect matching of {0..dim-1} in the normal form used by the
/// Pfaffian: pairs (p_1,p_2),...,(p_{dim-1},p_dim) with p_1<p_2, p_3<p_4,...
/// and p_1<p_3<...; sign is the signature of the flattened permutation.
struct PerfectMatchingPermutation {
  std::vector<std::pair<std::size_t, std::size_t>> pairing;
  int sign = 1;
};

namespace detail {

template <typename Fn>
void matchings_recurse(std::vector<std::size_t>& free_indices,
                       std::vector<std::pair<std::size_t, std::size_t>>& pairs, int sign,
                       Fn& fn) {
  if (free_indices.empty()) {
    fn(std::as_const(pairs), sign);
    return;
  }
  // Always pair the smallest free index; skipping m-1 free indices to reach
  // the partner contributes (-1)^(m-1) to the signature.
  std::size_t lo = free_indices.front();
  for (std::size_t m = 1; m < free_indices.size(); ++m) {
    std::size_t hi = free_indices[m];
    int step_sign = (m % 2 == 1) ? 1 : -1;
    std::vector<std::size_t> rest;
    rest.reserve(free_indices.size() - 2);
    for (std::size_t t = 1; t < free_indices.size(); ++t) {
      if (t != m) rest.push_back(free_indices[t]);
    }
    pairs.emplace_back(lo, hi);
    matchings_recurse(rest, pairs, sign * step_sign, fn);
    pairs.pop_back();
  }
}

}  // namespace detail

/// Visits every perfect matching of {0..dim-1} exactly once; dim must be
/// even. fn(pairs, sign). dim 0 yields the single empty matching.
template <typename Fn>
void for_each_perfect_matching(std::size_t dim, Fn&& fn) {
  if (dim % 2 != 0) throw std::invalid_argument("perfect matchings need even dimension");
  std::vector<std::size_t> free_indices(dim);
  for (std::size_t i = 0; i < dim; ++i) free_indices[i] = i;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(dim / 2);
  detail::matchings_recurse(free_indices, pairs, 1, fn);
}

inline std::vector<PerfectMatchingPermutation> all_perfect_matchings(std::size_t dim) {
  std::vector<PerfectMatchingPermutation> out;
  for_each_perfect_matching(
      dim, [&](const std::vector<std::pair<std::size_t, std::size_t>>& pairs, int sign) {
        out.push_back(PerfectMatchingPermutation{pairs, sign});
      });
  return out;
}

}  // namespace minorsum
