#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minorsum/errors.hpp"
#include "minorsum/matrix.hpp"
#include "minorsum/minor_sum.hpp"
#include "minorsum/pfaffian.hpp"
#include "minorsum/rational.hpp"

namespace minorsum {

/// Exponent tuple (a_1,...,a_k) for the integrand det(x_i^{a_j - 1}) over
/// the ordered simplex 0 < x_1 < ... < x_k < 1. Entries must be positive;
/// repeats are allowed (the integral is then zero).
class ExponentVector {
 public:
  explicit ExponentVector(std::vector<Rational> a) : a_(std::move(a)) {
    for (const Rational& x : a_) {
      if (x <= 0) throw std::domain_error("exponents must be positive");
    }
  }

  /// (1, 2, ..., k): the classical Vandermonde case.
  static ExponentVector consecutive(std::size_t k) {
    std::vector<Rational> a;
    a.reserve(k);
    for (std::size_t j = 1; j <= k; ++j) a.emplace_back(j);
    return ExponentVector(std::move(a));
  }

  std::size_t size() const { return a_.size(); }
  const Rational& operator[](std::size_t i) const { return a_[i]; }
  const std::vector<Rational>& values() const { return a_; }

  ExponentVector scaled(const Rational& lambda) const {
    std::vector<Rational> a;
    a.reserve(a_.size());
    for (const Rational& x : a_) a.push_back(x * lambda);
    return ExponentVector(std::move(a));
  }

  ExponentVector with_swapped(std::size_t i, std::size_t j) const {
    std::vector<Rational> a = a_;
    std::swap(a[i], a[j]);
    return ExponentVector(std::move(a));
  }

 private:
  std::vector<Rational> a_;
};

/// Single-function integral over (0,1): I_i = 1/a_i.
inline Rational closed_I_i(const Rational& a) {
  if (a <= 0) throw std::domain_error("I_i requires a positive exponent");
  return Rational(1) / a;
}

/// Ordered pair integral over 0 < x < y < 1:
/// I_ij = (a_j - a_i) / (a_i a_j (a_i + a_j)); antisymmetric in (i, j).
inline Rational closed_I_ij(const Rational& ai, const Rational& aj) {
  if (ai <= 0 || aj <= 0) throw std::domain_error("I_ij requires positive exponents");
  return (aj - ai) / (ai * aj * (ai + aj));
}

/// Pfaffian route: the skew matrix of closed-form pair integrals, bordered
/// by the single integrals when k is odd (with corner entry 0).
inline Rational lhs_pfaffian(const ExponentVector& a) {
  std::size_t k = a.size();
  if (k == 0) return Rational(1);
  if (k % 2 == 0) {
    auto m = SkewMatrix<Rational>::from_upper(
        k, [&](std::size_t i, std::size_t j) { return closed_I_ij(a[i], a[j]); });
    return pfaffian_eliminate(m);
  }
  auto m = SkewMatrix<Rational>::from_upper(k + 1, [&](std::size_t i, std::size_t j) {
    if (i == 0) return closed_I_i(a[j - 1]);
    return closed_I_ij(a[i - 1], a[j - 1]);
  });
  return pfaffian_eliminate(m);
}

/// Product route: prod_{i<j}(a_j - a_i) / (prod_i a_i * prod_{i<j}(a_j + a_i)).
inline Rational rhs_product(const ExponentVector& a) {
  std::size_t k = a.size();
  Rational num(1);
  Rational den(1);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] <= 0) throw std::domain_error("exponents must be positive");
    den *= a[i];
    for (std::size_t j = i + 1; j < k; ++j) {
      num *= a[j] - a[i];
      den *= a[j] + a[i];
    }
  }
  return num / den;
}

/// The consecutive-exponent special case a_j = j.
inline Rational elkies_howe_case(std::size_t k) {
  return rhs_product(ExponentVector::consecutive(k));
}

/// Finite sum c_1 x^{e_1} + ... + c_m x^{e_m} with distinct rational
/// exponents, closed under antidifferentiation while every exponent stays
/// above -1.
class PowerSum {
 public:
  PowerSum() = default;

  static PowerSum power_term(Rational coeff, Rational exponent) {
    PowerSum p;
    p.add_term(std::move(exponent), std::move(coeff));
    return p;
  }

  void add_term(Rational exponent, Rational coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exponent), std::move(coeff));
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::size_t term_count() const { return terms_.size(); }
  const std::map<Rational, Rational>& terms() const { return terms_; }

  /// Termwise antiderivative c x^e -> c/(e+1) x^{e+1}; requires e > -1, so
  /// the antiderivative vanishes at 0 and lower integration limits drop out.
  PowerSum antiderivative() const {
    PowerSum out;
    for (const auto& [e, c] : terms_) {
      if (e <= -1) throw std::domain_error("antiderivative needs exponents > -1");
      out.terms_.emplace(e + 1, c / (e + 1));
    }
    return out;
  }

  /// Multiplies by x^shift (exponent shift on every term).
  PowerSum shifted(const Rational& shift) const {
    PowerSum out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
    return out;
  }

  Rational value_at_one() const {
    Rational total(0);
    for (const auto& [e, c] : terms_) total += c;
    return total;
  }

 private:
  std::map<Rational, Rational> terms_;
};

inline constexpr std::size_t kMaxIteratedOracleK = 7;

/// Definitional evaluation of the simplex integral: expand det(x_i^{a_j-1})
/// into its k! permutation monomials, then antidifferentiate inside-out,
/// x_1 from 0 to x_2, ..., x_k from 0 to 1, carrying PowerSum forms
/// exactly. Independent of the Pfaffian and product routes.
inline Rational iterated_integral_oracle(const ExponentVector& a) {
  std::size_t k = a.size();
  if (k > kMaxIteratedOracleK)
    throw resource_limit_error("iterated oracle guarded at k <= 7 (k! monomials)");
  if (k == 0) return Rational(1);
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rational total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    PowerSum p = PowerSum::power_term(Rational(1), a[perm[0]] - 1);
    for (std::size_t j = 1; j < k; ++j) {
      // integrate the previous variable up to x_{j+1}, then pick up the
      // x_{j+1}^{a-1} factor from the permutation monomial
      p = p.antiderivative().shifted(a[perm[j]] - 1);
    }
    Rational value = p.antiderivative().value_at_one();
    if (inversions % 2 == 0) {
      total += value;
    } else {
      total -= value;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// The discretization grid matrix: n+1 nodes x_i = lo + h*i with
/// h = (hi-lo)/n, row i holding h * x_i^{a_j - 1}. At x = 0 the sample is
/// 0 for a_j > 1, 1 for a_j = 1, and defined as 0 for a_j < 1 (one dropped
/// node of an absolutely convergent integral, harmless in the limit).
inline DenseMatrix<double> riemann_matrix(const ExponentVector& a, std::size_t n, double lo,
                                          double hi) {
  if (n < 1) throw std::invalid_argument("grid count must be at least 1");
  std::size_t k = a.size();
  double h = (hi - lo) / static_cast<double>(n);
  std::vector<double> exponents;
  exponents.reserve(k);
  for (std::size_t j = 0; j < k; ++j) exponents.push_back(to_double(a[j] - 1));
  return DenseMatrix<double>::build(n + 1, k, [&](std::size_t i, std::size_t j) {
    double x = lo + h * static_cast<double>(i);
    double e = exponents[j];
    double sample;
    if (x > 0.0) {
      sample = std::pow(x, e);
    } else if (e == 0.0) {
      sample = 1.0;
    } else {
      sample = 0.0;
    }
    return h * sample;
  });
}

/// Floating minor sum of the grid matrix over (0,1); converges to the
/// exact integral as n grows.
inline double approx_integral(const ExponentVector& a, std::size_t n) {
  if (n < a.size() || n < 1) throw std::invalid_argument("need n >= k and n >= 1");
  return minor_sum_okada(riemann_matrix(a, n, 0.0, 1.0)).value;
}

struct ConvergenceRow {
  std::size_t n;
  double approx;
  Rational exact;
  double abs_error;
};

/// One row per grid size, with the exact Pfaffian value as reference.
inline std::vector<ConvergenceRow> convergence_table(const ExponentVector& a,
                                                     std::span<const std::size_t> grid) {
  if (grid.empty()) throw std::invalid_argument("grid must be nonempty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) throw std::invalid_argument("grid must be strictly increasing");
  }
  Rational exact = lhs_pfaffian(a);
  double exact_d = to_double(exact);
  std::vector<ConvergenceRow> rows;
  rows.reserve(grid.size());
  for (std::size_t n : grid) {
    double approx = approx_integral(a, n);
    rows.push_back(ConvergenceRow{n, approx, exact, std::abs(approx - exact_d)});
  }
  return rows;
}

}  // namespace minorsum
