#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minorsum/combinatorics.hpp"
#include "minorsum/errors.hpp"
#include "minorsum/matrix.hpp"
#include "minorsum/multipoly.hpp"
#include "minorsum/rational_function.hpp"

namespace minorsum {

inline constexpr std::size_t kMaxSymbolicK = 5;

enum class PfaffianParity { even, odd_augmented };

/// The closed-form Pfaffian matrix over the function field in a_1..a_k:
/// interior entries (a_j - a_i) / (a_i a_j (a_i + a_j)), stored unreduced,
/// plus a border row/column (0, 1/a_1, ..., 1/a_k) when k is odd.
class SymbolicPfaffianMatrix {
 public:
  SymbolicPfaffianMatrix(std::size_t k, PfaffianParity parity,
                         SkewMatrix<RationalFunction> entries)
      : k_(k), parity_(parity), entries_(std::move(entries)) {}

  std::size_t k() const { return k_; }
  PfaffianParity parity() const { return parity_; }
  std::size_t dim() const { return entries_.dim(); }
  const SkewMatrix<RationalFunction>& matrix() const { return entries_; }

  /// Exponent variable (0-based) behind matrix index r; the border index 0
  /// of an odd-augmented matrix carries no variable.
  std::size_t exponent_index(std::size_t r) const {
    return parity_ == PfaffianParity::even ? r : r - 1;
  }

 private:
  std::size_t k_;
  PfaffianParity parity_;
  SkewMatrix<RationalFunction> entries_;
};

namespace detail {

inline MultiPoly sym_var(std::size_t k, std::size_t v) { return MultiPoly::variable(k, v); }

// (a_j - a_i) / (a_i a_j (a_i + a_j)) for 0-based variable indices i < j
inline RationalFunction pair_integral_entry(std::size_t k, std::size_t i, std::size_t j) {
  MultiPoly ai = sym_var(k, i);
  MultiPoly aj = sym_var(k, j);
  return RationalFunction(aj - ai, ai * aj * (ai + aj));
}

// 1 / a_i
inline RationalFunction border_entry(std::size_t k, std::size_t i) {
  return RationalFunction(MultiPoly::one(k), sym_var(k, i));
}

}  // namespace detail

inline SymbolicPfaffianMatrix build_symbolic_matrix(std::size_t k) {
  if (k < 1 || k > kMaxSymbolicK)
    throw resource_limit_error("symbolic matrices guarded at 1 <= k <= 5");
  if (k % 2 == 0) {
    auto m = SkewMatrix<RationalFunction>::from_upper(
        k, [&](std::size_t i, std::size_t j) { return detail::pair_integral_entry(k, i, j); });
    return SymbolicPfaffianMatrix(k, PfaffianParity::even, std::move(m));
  }
  auto m = SkewMatrix<RationalFunction>::from_upper(k + 1, [&](std::size_t i, std::size_t j) {
    if (i == 0) return detail::border_entry(k, j - 1);
    return detail::pair_integral_entry(k, i - 1, j - 1);
  });
  return SymbolicPfaffianMatrix(k, PfaffianParity::odd_augmented, std::move(m));
}

/// The Vandermonde difference product N = prod_{i<j} (a_j - a_i).
inline MultiPoly vandermonde_difference_product(std::size_t k) {
  MultiPoly n = MultiPoly::one(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      n *= detail::sym_var(k, j) - detail::sym_var(k, i);
  return n;
}

/// D = prod_i a_i * prod_{i<j} (a_i + a_j).
inline MultiPoly exponent_sum_product(std::size_t k) {
  MultiPoly d = MultiPoly::one(k);
  for (std::size_t i = 0; i < k; ++i) d *= detail::sym_var(k, i);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) d *= detail::sym_var(k, i) + detail::sym_var(k, j);
  return d;
}

/// Pfaffian of the symbolic matrix by the perfect-matching sum. Every
/// matching consumes each a_i denominator factor exactly once and one
/// (a_i + a_j) factor per interior pair, so the whole sum sits over the
/// common denominator D; each term contributes its pair differences times
/// the unused (a_i + a_j) factors. Only polynomial +,-,* are needed, and
/// the cross-multiplication blowup of summing unreduced fractions pairwise
/// never happens.
inline RationalFunction symbolic_pfaffian(const SymbolicPfaffianMatrix& m) {
  std::size_t k = m.k();
  std::size_t dim = m.dim();
  if (dim > kMaxSymbolicK + 1)
    throw resource_limit_error("symbolic Pfaffian guarded at dim <= 6");
  bool odd = m.parity() == PfaffianParity::odd_augmented;
  MultiPoly total = MultiPoly::zero(k);
  for_each_perfect_matching(dim, [&](const auto& pairs, int sign) {
    MultiPoly term = MultiPoly::one(k);
    std::set<std::pair<std::size_t, std::size_t>> used;
    for (const auto& [r, c] : pairs) {
      if (odd && r == 0) continue;  // border factor 1 / a_c
      std::size_t i = m.exponent_index(r);
      std::size_t j = m.exponent_index(c);
      term *= detail::sym_var(k, j) - detail::sym_var(k, i);
      used.emplace(i, j);
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!used.contains({i, j}))
          term *= detail::sym_var(k, i) + detail::sym_var(k, j);
      }
    }
    total = sign > 0 ? total + term : total - term;
  });
  return RationalFunction(std::move(total), exponent_sum_product(k));
}

/// Machine check of the closed-form identity at size k: the symbolic
/// Pfaffian must equal N/D by cross-multiplication.
inline bool verify_identity(std::size_t k) {
  SymbolicPfaffianMatrix m = build_symbolic_matrix(k);
  RationalFunction pf = symbolic_pfaffian(m);
  RationalFunction expected(vandermonde_difference_product(k), exponent_sum_product(k));
  return ratfun_equal(pf, expected);
}

/// Mechanizes the induction step: scale the a_1 row and column by a_1,
/// set a_1 = 0, relabel a_{i+1} -> a_i, and compare with the matrix for
/// k-1. For odd k the scaled row becomes a copy of the border row (checked
/// entrywise, with corner entry 1), and the two collapse away leaving the
/// even matrix on a_2..a_k.
inline bool reduction_check(std::size_t k) {
  if (k < 2 || k > kMaxSymbolicK)
    throw std::invalid_argument("reduction check applies to 2 <= k <= 5");
  SymbolicPfaffianMatrix m = build_symbolic_matrix(k);
  std::size_t a1_row = m.parity() == PfaffianParity::even ? 0 : 1;
  auto transformed = [&](std::size_t i, std::size_t j) {
    RationalFunction e = m.matrix().at(i, j);
    if (i == a1_row || j == a1_row) e = e.scaled_by_variable(0);
    return e.substitute_zero(0);
  };
  SymbolicPfaffianMatrix target = build_symbolic_matrix(k - 1);
  if (m.parity() == PfaffianParity::even) {
    // dim k matrix maps directly onto the odd-augmented matrix for k-1
    for (std::size_t i = 0; i < m.dim(); ++i) {
      for (std::size_t j = i + 1; j < m.dim(); ++j) {
        if (!ratfun_equal(transformed(i, j).drop_variable(0), target.matrix().at(i, j)))
          return false;
      }
    }
    return true;
  }
  // odd k: the scaled a_1 row must replicate the border row, then both drop
  if (!ratfun_equal(transformed(0, 1), RationalFunction::one(k))) return false;
  for (std::size_t j = 2; j < m.dim(); ++j) {
    if (!ratfun_equal(transformed(0, j), transformed(1, j))) return false;
  }
  for (std::size_t i = 2; i < m.dim(); ++i) {
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      if (!ratfun_equal(transformed(i, j).drop_variable(0), target.matrix().at(i - 2, j - 2)))
        return false;
    }
  }
  return true;
}

}  // namespace minorsum
