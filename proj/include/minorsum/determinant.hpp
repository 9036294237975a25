#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "minorsum/matrix.hpp"
#include "minorsum/rational.hpp"

namespace minorsum {

/// Leibniz permutation sum, sign recomputed per permutation from the
/// inversion count. Factorial cost; kept as the independent oracle against
/// the elimination paths.
template <typename F>
F determinant_leibniz(const DenseMatrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
  std::size_t n = m.rows();
  if (n == 0) return F(1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  F total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    F term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    if (inversions % 2 == 0) {
      total = total + term;
    } else {
      total = total - term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace detail {

// Bareiss fraction-free elimination; every division is exact over the
// integers, which keeps intermediates far smaller than naive expansion.
inline BigInt determinant_bareiss(std::size_t n, std::vector<BigInt> w) {
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev_pivot = 1;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    std::size_t pivot_row = t;
    while (pivot_row < n && w[pivot_row * n + t] == 0) ++pivot_row;
    if (pivot_row == n) return 0;
    if (pivot_row != t) {
      for (std::size_t c = 0; c < n; ++c) std::swap(w[t * n + c], w[pivot_row * n + c]);
      sign = -sign;
    }
    for (std::size_t i = t + 1; i < n; ++i) {
      for (std::size_t j = t + 1; j < n; ++j) {
        w[i * n + j] = (w[i * n + j] * w[t * n + t] - w[i * n + t] * w[t * n + j]) / prev_pivot;
      }
      w[i * n + t] = 0;
    }
    prev_pivot = w[t * n + t];
  }
  BigInt result = w[(n - 1) * n + (n - 1)];
  if (sign < 0) return BigInt(-result);
  return result;
}

// Gaussian elimination with division. Exact fields pivot on the first
// nonzero entry; floating fields pivot on the largest magnitude.
template <typename F>
F determinant_elimination(const DenseMatrix<F>& m) {
  std::size_t n = m.rows();
  if (n == 0) return F(1);
  std::vector<F> w = m.entries();
  int sign = 1;
  F det(1);
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pivot_row = t;
    if constexpr (is_exact_field_v<F>) {
      while (pivot_row < n && w[pivot_row * n + t] == F(0)) ++pivot_row;
      if (pivot_row == n) return F(0);
    } else {
      for (std::size_t r = t + 1; r < n; ++r)
        if (std::abs(w[r * n + t]) > std::abs(w[pivot_row * n + t])) pivot_row = r;
      if (w[pivot_row * n + t] == F(0)) return F(0);
    }
    if (pivot_row != t) {
      for (std::size_t c = t; c < n; ++c) std::swap(w[t * n + c], w[pivot_row * n + c]);
      sign = -sign;
    }
    const F pivot = w[t * n + t];
    det = det * pivot;
    for (std::size_t i = t + 1; i < n; ++i) {
      if (w[i * n + t] == F(0)) continue;
      F factor = w[i * n + t] / pivot;
      for (std::size_t j = t; j < n; ++j) w[i * n + j] = w[i * n + j] - factor * w[t * n + j];
    }
  }
  if (sign < 0) return F(-det);
  return det;
}

}  // namespace detail

/// Exact (or floating) determinant. Integer-valued rational matrices are
/// routed through fraction-free Bareiss elimination; everything else uses
/// plain elimination with exact division or partial pivoting.
template <typename F>
F determinant(const DenseMatrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
  if constexpr (std::is_same_v<F, Rational>) {
    bool integral = true;
    for (const Rational& x : m.entries()) {
      if (denominator(x) != 1) {
        integral = false;
        break;
      }
    }
    if (integral) {
      std::vector<BigInt> w;
      w.reserve(m.entries().size());
      for (const Rational& x : m.entries()) w.push_back(numerator(x));
      return Rational(detail::determinant_bareiss(m.rows(), std::move(w)));
    }
  }
  return detail::determinant_elimination(m);
}

}  // namespace minorsum
