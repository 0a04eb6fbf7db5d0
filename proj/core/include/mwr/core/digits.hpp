#pragma once

#include <cstdint>
#include <vector>

namespace mwr {

/// n^k, throwing ArithmeticOverflow if it does not fit.
std::int64_t int_pow(std::int64_t n, unsigned k);

/// The k base-n digits of z, most significant first.
std::vector<std::int64_t> to_digits(std::int64_t z, std::int64_t n, unsigned k);
std::int64_t from_digits(const std::vector<std::int64_t>& digits, std::int64_t n);

/// Reverses the k-digit base-n representation of z (leading zeros count as
/// digits). Requires 0 <= z < n^k, n >= 2, k >= 1.
std::int64_t digit_reverse(std::int64_t z, std::int64_t n, unsigned k);

}  // namespace mwr
