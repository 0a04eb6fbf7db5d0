#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mwr/core/checked_int.hpp"

namespace mwr::reductions {

/// Big-M policy. kTight derives the smallest sufficient constant from the
/// instance; kPaper uses the published formulas and generally needs BigInt.
enum class Mode { kTight, kPaper };

std::string_view to_string(Mode m);
Mode mode_from_string(std::string_view s);

/// OPT_target = scale * OPT_source + offset.
struct ReductionCertificate {
  std::string reduction_id;
  BigInt scale{1};
  BigInt offset{0};
  std::map<std::string, BigInt> params;
  std::map<std::string, std::vector<std::int64_t>> backmap;

  BigInt target_from_source(const BigInt& source_opt) const { return scale * source_opt + offset; }
  const BigInt& param(const std::string& name) const;
};

template <class Target>
struct Reduction {
  Target target;
  ReductionCertificate cert;
};

/// Narrows an exact value into the working arithmetic type; overflows raise.
template <class T>
T narrow(const BigInt& x);

template <>
inline BigInt narrow<BigInt>(const BigInt& x) {
  return x;
}

template <>
inline CheckedInt narrow<CheckedInt>(const BigInt& x) {
  return to_checked(x);
}

inline std::int64_t binomial2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace mwr::reductions
