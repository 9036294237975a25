#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace minorsum {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored reduced with positive
// denominator. Division by zero throws std::overflow_error.
using Rational = boost::multiprecision::cpp_rational;

// Exact fields get first-nonzero pivoting and exact antisymmetry checks;
// floating fields get magnitude pivoting and tolerance checks.
template <typename F>
struct is_exact_field : std::false_type {};
template <>
struct is_exact_field<Rational> : std::true_type {};

template <typename F>
inline constexpr bool is_exact_field_v = is_exact_field<F>::value;

inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// Parses "p" or "p/q": optional leading '-', ASCII decimal digits, q > 0.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> BigInt {
    throw std::invalid_argument("bad rational literal: '" + std::string(text) + "'");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto parse_digits = [&](std::string_view digits) -> BigInt {
    if (digits.empty()) return fail();
    BigInt value = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') return fail();
      value = value * 10 + (c - '0');
    }
    return value;
  };
  BigInt num;
  BigInt den = 1;
  if (auto slash = body.find('/'); slash == std::string_view::npos) {
    num = parse_digits(body);
  } else {
    num = parse_digits(body.substr(0, slash));
    den = parse_digits(body.substr(slash + 1));
    if (den == 0) fail();
  }
  if (negative) num = -num;
  return Rational(num, den);
}

/// Canonical literal: "p/q", or just "p" when the denominator is 1.
/// The sign sits on the numerator.
inline std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

template <typename F>
F rational_pow(F base, unsigned exponent) {
  F result(1);
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

}  // namespace minorsum
