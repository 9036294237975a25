#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minorsum/rational.hpp"

namespace minorsum {

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients, in variables a_1..a_k. Terms live in a map keyed by the
/// exponent tuple in lexicographic order and zero coefficients are never
/// stored, so two polynomials are equal iff their term maps are identical.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, BigInt>;

  explicit MultiPoly(std::size_t var_count) : var_count_(var_count) {}

  static MultiPoly zero(std::size_t var_count) { return MultiPoly(var_count); }

  static MultiPoly constant(std::size_t var_count, BigInt value) {
    MultiPoly p(var_count);
    p.add_term(Exponents(var_count, 0), std::move(value));
    return p;
  }

  static MultiPoly one(std::size_t var_count) { return constant(var_count, 1); }

  /// The monomial a_{index+1} (0-based index).
  static MultiPoly variable(std::size_t var_count, std::size_t index) {
    if (index >= var_count) throw std::invalid_argument("variable index out of range");
    MultiPoly p(var_count);
    Exponents e(var_count, 0);
    e[index] = 1;
    p.add_term(std::move(e), 1);
    return p;
  }

  std::size_t var_count() const { return var_count_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Accumulates coeff onto the term with the given exponents, dropping the
  /// term if the total cancels to zero.
  void add_term(Exponents exps, BigInt coeff) {
    if (exps.size() != var_count_) throw std::invalid_argument("exponent tuple length mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exps), std::move(coeff));
    if (!inserted) {
      // try_emplace leaves coeff untouched when the key already exists
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
    return lhs.var_count_ == rhs.var_count_ && lhs.terms_ == rhs.terms_;
  }

  MultiPoly operator-() const {
    MultiPoly out(var_count_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend MultiPoly operator+(const MultiPoly& lhs, const MultiPoly& rhs) {
    check_same_vars(lhs, rhs);
    MultiPoly out = lhs;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
  }

  friend MultiPoly operator-(const MultiPoly& lhs, const MultiPoly& rhs) {
    check_same_vars(lhs, rhs);
    MultiPoly out = lhs;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
  }

  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    check_same_vars(lhs, rhs);
    MultiPoly out(lhs.var_count_);
    for (const auto& [el, cl] : lhs.terms_) {
      for (const auto& [er, cr] : rhs.terms_) {
        Exponents e(lhs.var_count_);
        for (std::size_t i = 0; i < lhs.var_count_; ++i) e[i] = el[i] + er[i];
        out.add_term(std::move(e), cl * cr);
      }
    }
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& rhs) { return *this = *this + rhs; }
  MultiPoly& operator-=(const MultiPoly& rhs) { return *this = *this - rhs; }
  MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

  /// Max total degree over terms; -1 for the zero polynomial.
  int total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (unsigned x : e) d += static_cast<int>(x);
      if (d > best) best = d;
    }
    return best;
  }

  /// Sets variable var_index to zero: terms that mention it drop out. The
  /// result keeps the same variable count, with the substituted variable
  /// absent from every surviving exponent tuple.
  MultiPoly substitute_zero(std::size_t var_index) const {
    if (var_index >= var_count_) throw std::invalid_argument("variable index out of range");
    MultiPoly out(var_count_);
    for (const auto& [e, c] : terms_) {
      if (e[var_index] == 0) out.terms_.emplace(e, c);
    }
    return out;
  }

  /// True when every term carries a positive power of the variable, so the
  /// polynomial is divisible by it termwise.
  bool divisible_by_variable(std::size_t var_index) const {
    if (var_index >= var_count_) throw std::invalid_argument("variable index out of range");
    for (const auto& [e, c] : terms_) {
      if (e[var_index] == 0) return false;
    }
    return true;
  }

  MultiPoly divided_by_variable(std::size_t var_index) const {
    if (!divisible_by_variable(var_index))
      throw std::invalid_argument("polynomial not divisible by requested variable");
    MultiPoly out(var_count_);
    for (const auto& [e, c] : terms_) {
      Exponents reduced = e;
      --reduced[var_index];
      out.terms_.emplace(std::move(reduced), c);
    }
    return out;
  }

  /// Removes a variable that no term mentions, shrinking the variable count
  /// by one and shifting later indices down. Used to relabel a_{i+1} -> a_i
  /// after a substitution killed a_1.
  MultiPoly drop_variable(std::size_t var_index) const {
    if (var_index >= var_count_) throw std::invalid_argument("variable index out of range");
    MultiPoly out(var_count_ - 1);
    for (const auto& [e, c] : terms_) {
      if (e[var_index] != 0)
        throw std::invalid_argument("cannot drop a variable that still appears");
      Exponents reduced;
      reduced.reserve(var_count_ - 1);
      for (std::size_t i = 0; i < var_count_; ++i) {
        if (i != var_index) reduced.push_back(e[i]);
      }
      out.terms_.emplace(std::move(reduced), c);
    }
    return out;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != var_count_) throw std::invalid_argument("evaluation point length mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
      Rational term(c);
      for (std::size_t i = 0; i < var_count_; ++i) {
        if (e[i] != 0) term *= rational_pow(point[i], e[i]);
      }
      total += term;
    }
    return total;
  }

  /// Debug rendering: lexicographically ordered terms "c*a1^e1*...*ak^ek"
  /// joined by " + " (variables with exponent zero are omitted).
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += c.str();
      for (std::size_t i = 0; i < var_count_; ++i) {
        if (e[i] == 0) continue;
        out += "*a" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
      }
    }
    return out;
  }

 private:
  static void check_same_vars(const MultiPoly& lhs, const MultiPoly& rhs) {
    if (lhs.var_count_ != rhs.var_count_)
      throw std::invalid_argument("polynomial variable counts differ");
  }

  std::size_t var_count_;
  TermMap terms_;
};

}  // namespace minorsum
