#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include "minorsum/matrix.hpp"
#include "minorsum/rational.hpp"

namespace minorsum {

/// Deterministic draws on top of std::mt19937_64, whose output sequence is
/// fixed by the standard, so a seed reproduces the same trials everywhere.
/// Bounded draws use rejection sampling rather than
/// std::uniform_int_distribution, whose mapping is implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Unbiased draw from {0, ..., bound-1}.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    if (bound == 1) return 0;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max % bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = engine_();
      if (rem == 0 || r <= max - rem) return r % bound;
    }
  }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty integer range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
  }

  /// Rational with numerator in [-max_num, max_num] and denominator in
  /// [1, max_den].
  Rational rational(std::int64_t max_num, std::int64_t max_den) {
    return make_rational(uniform_int(-max_num, max_num), uniform_int(1, max_den));
  }

  /// Strictly positive rational with numerator and denominator in [1, max].
  Rational positive_rational(std::int64_t max_num, std::int64_t max_den) {
    return make_rational(uniform_int(1, max_num), uniform_int(1, max_den));
  }

 private:
  std::mt19937_64 engine_;
};

/// n-by-k matrix with integer entries uniform in [-max_entry, max_entry].
inline DenseMatrix<Rational> random_integer_matrix(SeededRng& rng, std::size_t n, std::size_t k,
                                                   std::int64_t max_entry) {
  return DenseMatrix<Rational>::build(n, k, [&](std::size_t, std::size_t) {
    return Rational(rng.uniform_int(-max_entry, max_entry));
  });
}

}  // namespace minorsum
