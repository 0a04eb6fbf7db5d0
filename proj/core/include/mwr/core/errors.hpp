#pragma once

#include <stdexcept>
#include <string>

namespace mwr {

// Precondition violations on domain objects and operations.
using DomainError = std::domain_error;

/// Raised when a bounded (64-bit) computation would wrap.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A target witness that does not satisfy the gadget constraints of the
/// reduction it is being decoded against.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad command line / harness parameters.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw DomainError(what);
}

}  // namespace mwr
