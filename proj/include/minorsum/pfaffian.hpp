#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "minorsum/combinatorics.hpp"
#include "minorsum/errors.hpp"
#include "minorsum/matrix.hpp"
#include "minorsum/rational.hpp"

namespace minorsum {

inline constexpr std::size_t kMaxCombinatorialPfaffianDim = 12;

/// Pfaffian straight from the definition: the signed sum over all
/// (dim-1)!! perfect matchings of products of paired entries. Works over
/// any commutative ring (division-free), so it doubles as the oracle for
/// the elimination path and serves the symbolic module. Guarded at dim 12
/// (10395 terms).
template <typename F>
F pfaffian_combinatorial(const SkewMatrix<F>& s) {
  std::size_t dim = s.dim();
  if (dim % 2 != 0) throw std::invalid_argument("Pfaffian needs even dimension");
  if (dim > kMaxCombinatorialPfaffianDim)
    throw resource_limit_error("combinatorial Pfaffian guarded at dim 12; use pfaffian_eliminate");
  if (dim == 0) {
    if constexpr (std::is_constructible_v<F, int>) {
      return F(1);
    } else {
      throw std::invalid_argument("dim-0 Pfaffian needs an int-constructible field");
    }
  }
  F total = s.at(0, 0);  // additive identity: the diagonal is exactly zero
  for_each_perfect_matching(dim, [&](const auto& pairs, int sign) {
    F term = s.at(pairs[0].first, pairs[0].second);
    for (std::size_t p = 1; p < pairs.size(); ++p)
      term = term * s.at(pairs[p].first, pairs[p].second);
    if (sign > 0) {
      total = total + term;
    } else {
      total = total - term;
    }
  });
  return total;
}

/// Pfaffian by skew-symmetric Gaussian elimination. Pivots on (2t, 2t+1);
/// a simultaneous row-and-column swap that brings a nonzero pivot into
/// place flips the running sign; mirrored row/column updates clear the
/// pivot row. Result is sign times the product of pivots; an all-zero
/// pivot row means the Pfaffian is 0.
template <typename F>
F pfaffian_eliminate(const SkewMatrix<F>& s) {
  std::size_t dim = s.dim();
  if (dim % 2 != 0) throw std::invalid_argument("Pfaffian needs even dimension");
  if (dim == 0) return F(1);
  std::vector<F> w = s.entries_copy();
  auto at = [&](std::size_t i, std::size_t j) -> F& { return w[i * dim + j]; };
  int sign = 1;
  F result(1);
  for (std::size_t t = 0; t + 1 < dim; t += 2) {
    std::size_t pivot_col = t + 1;
    if constexpr (is_exact_field_v<F>) {
      while (pivot_col < dim && at(t, pivot_col) == F(0)) ++pivot_col;
      if (pivot_col == dim) return F(0);
    } else {
      for (std::size_t c = t + 2; c < dim; ++c)
        if (std::abs(at(t, c)) > std::abs(at(t, pivot_col))) pivot_col = c;
      if (at(t, pivot_col) == F(0)) return F(0);
    }
    if (pivot_col != t + 1) {
      for (std::size_t c = 0; c < dim; ++c) std::swap(at(t + 1, c), at(pivot_col, c));
      for (std::size_t r = 0; r < dim; ++r) std::swap(at(r, t + 1), at(r, pivot_col));
      sign = -sign;
    }
    const F pivot = at(t, t + 1);
    result = result * pivot;
    for (std::size_t i = t + 2; i < dim; ++i) {
      if (at(t, i) == F(0)) continue;
      F factor = at(t, i) / pivot;
      for (std::size_t c = 0; c < dim; ++c) at(i, c) = at(i, c) - factor * at(t + 1, c);
      for (std::size_t r = 0; r < dim; ++r) at(r, i) = at(r, i) - factor * at(r, t + 1);
    }
  }
  if (sign < 0) return F(-result);
  return result;
}

}  // namespace minorsum
