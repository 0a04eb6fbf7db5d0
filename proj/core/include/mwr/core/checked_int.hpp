#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "mwr/core/errors.hpp"

namespace mwr {

/// Signed 64-bit integer whose arithmetic throws ArithmeticOverflow
/// instead of wrapping. This is the bounded arithmetic mode.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT(implicit)

  constexpr std::int64_t get() const { return v_; }
  explicit constexpr operator std::int64_t() const { return v_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow("integer overflow in addition");
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
    return r;
  }
  CheckedInt operator-() const { return CheckedInt{0} - *this; }

  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

  friend constexpr bool operator==(CheckedInt, CheckedInt) = default;
  friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;

  friend std::ostream& operator<<(std::ostream& os, CheckedInt x) { return os << x.v_; }

 private:
  std::int64_t v_ = 0;
};

/// Arbitrary-precision mode, used when the quoted loose constants
/// (e.g. 100^{10d}) are selected.
using BigInt = boost::multiprecision::cpp_int;

/// Default scalar of the library.
using Int = CheckedInt;

inline CheckedInt abs(CheckedInt x) { return x < 0 ? -x : x; }

// Conversions used by generic code templated on the scalar type.
template <class T>
T from_int(CheckedInt x);

template <>
inline CheckedInt from_int<CheckedInt>(CheckedInt x) { return x; }

template <>
inline BigInt from_int<BigInt>(CheckedInt x) { return BigInt(x.get()); }

inline BigInt to_big(CheckedInt x) { return BigInt(x.get()); }
inline BigInt to_big(const BigInt& x) { return x; }

/// Narrowing conversion; throws ArithmeticOverflow when out of range.
inline CheckedInt to_checked(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw ArithmeticOverflow("value does not fit in 64 bits: " + x.str());
  return CheckedInt{static_cast<std::int64_t>(x)};
}
inline CheckedInt to_checked(CheckedInt x) { return x; }

inline std::string to_string(CheckedInt x) { return std::to_string(x.get()); }
inline std::string to_string(const BigInt& x) { return x.str(); }

template <class T>
T abs_value(const T& x) {
  return x < 0 ? T(-x) : x;
}

/// base^exp with the scalar's own overflow policy.
template <class T>
T power(T base, unsigned exp) {
  T r{1};
  for (unsigned i = 0; i < exp; ++i) r = r * base;
  return r;
}

}  // namespace mwr

template <>
struct std::hash<mwr::CheckedInt> {
  std::size_t operator()(mwr::CheckedInt x) const noexcept { return std::hash<std::int64_t>{}(x.get()); }
};
