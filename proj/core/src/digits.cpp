#include "mwr/core/digits.hpp"

#include <algorithm>

#include "mwr/core/checked_int.hpp"
#include "mwr/core/errors.hpp"

namespace mwr {

std::int64_t int_pow(std::int64_t n, unsigned k) {
  return power(CheckedInt{n}, k).get();
}

std::vector<std::int64_t> to_digits(std::int64_t z, std::int64_t n, unsigned k) {
  require(n >= 2, "digit base must be at least 2");
  require(k >= 1, "digit count must be positive");
  require(z >= 0 && z < int_pow(n, k), "value out of range for k base-n digits");
  std::vector<std::int64_t> digits(k);
  for (unsigned j = k; j-- > 0;) {
    digits[j] = z % n;
    z /= n;
  }
  return digits;
}

std::int64_t from_digits(const std::vector<std::int64_t>& digits, std::int64_t n) {
  CheckedInt z = 0;
  for (auto x : digits) {
    require(x >= 0 && x < n, "digit out of range");
    z = z * n + x;
  }
  return z.get();
}

std::int64_t digit_reverse(std::int64_t z, std::int64_t n, unsigned k) {
  auto digits = to_digits(z, n, k);
  std::reverse(digits.begin(), digits.end());
  return from_digits(digits, n);
}

}  // namespace mwr
