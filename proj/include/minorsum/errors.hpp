#pragma once

#include <stdexcept>

namespace minorsum {

// Raised when a computation would blow past one of the fixed guards
// (brute-force subset count, combinatorial Pfaffian dimension, symbolic k).
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace minorsum
