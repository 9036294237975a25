#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "minorsum/multipoly.hpp"
#include "minorsum/rational.hpp"

namespace minorsum {

/// Unreduced quotient of two integer polynomials. No multivariate GCD is
/// attempted anywhere: equality is decided by cross-multiplication,
/// p/q = r/s iff p*s = r*q.
class RationalFunction {
 public:
  RationalFunction(MultiPoly num, MultiPoly den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (num_.var_count() != den_.var_count())
      throw std::invalid_argument("rational function variable counts differ");
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  }

  static RationalFunction from_poly(MultiPoly p) {
    MultiPoly one = MultiPoly::one(p.var_count());
    return RationalFunction(std::move(p), std::move(one));
  }

  static RationalFunction zero(std::size_t var_count) {
    return RationalFunction(MultiPoly::zero(var_count), MultiPoly::one(var_count));
  }

  static RationalFunction one(std::size_t var_count) {
    return from_poly(MultiPoly::one(var_count));
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  std::size_t var_count() const { return num_.var_count(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const { return RationalFunction(-num_, den_); }

  friend RationalFunction operator+(const RationalFunction& lhs, const RationalFunction& rhs) {
    return RationalFunction(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
  }

  friend RationalFunction operator-(const RationalFunction& lhs, const RationalFunction& rhs) {
    return RationalFunction(lhs.num_ * rhs.den_ - rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
  }

  friend RationalFunction operator*(const RationalFunction& lhs, const RationalFunction& rhs) {
    return RationalFunction(lhs.num_ * rhs.num_, lhs.den_ * rhs.den_);
  }

  /// Mathematical equality by cross-multiplication.
  friend bool operator==(const RationalFunction& lhs, const RationalFunction& rhs) {
    return lhs.num_ * rhs.den_ == rhs.num_ * lhs.den_;
  }

  /// Multiplies by the variable a_{var_index+1}. When the denominator is
  /// termwise divisible by that variable the factor cancels there instead of
  /// inflating the numerator; this is what keeps a later a_1 = 0
  /// substitution regular.
  RationalFunction scaled_by_variable(std::size_t var_index) const {
    if (den_.divisible_by_variable(var_index))
      return RationalFunction(num_, den_.divided_by_variable(var_index));
    return RationalFunction(num_ * MultiPoly::variable(var_count(), var_index), den_);
  }

  /// Substitutes zero for a variable in numerator and denominator
  /// independently. A denominator vanishing here means the caller scaled the
  /// wrong row, hence logic_error rather than a limit computation.
  RationalFunction substitute_zero(std::size_t var_index) const {
    MultiPoly den_sub = den_.substitute_zero(var_index);
    if (den_sub.is_zero())
      throw std::logic_error("denominator vanished under zero substitution");
    return RationalFunction(num_.substitute_zero(var_index), std::move(den_sub));
  }

  /// Drops a variable absent from both parts, relabelling the later ones.
  RationalFunction drop_variable(std::size_t var_index) const {
    return RationalFunction(num_.drop_variable(var_index), den_.drop_variable(var_index));
  }

  Rational evaluate(std::span<const Rational> point) const {
    Rational den_value = den_.evaluate(point);
    if (den_value == 0) throw std::domain_error("rational function denominator is zero at point");
    return num_.evaluate(point) / den_value;
  }

  std::string to_string() const {
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }

 private:
  MultiPoly num_;
  MultiPoly den_;
};

inline bool ratfun_equal(const RationalFunction& lhs, const RationalFunction& rhs) {
  return lhs == rhs;
}

template <>
struct is_exact_field<RationalFunction> : std::true_type {};

}  // namespace minorsum
