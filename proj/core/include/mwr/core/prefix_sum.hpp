#pragma once

#include <cstddef>
#include <vector>

#include "mwr/core/dense_array.hpp"

namespace mwr {

/// Cumulative sums over a DenseArray; answers inclusive box sums with
/// 2^d lookups by inclusion-exclusion.
template <class T = Int>
class PrefixSumIndex {
 public:
  explicit PrefixSumIndex(const DenseArray<T>& a) : d_(a.dim()), side_(a.side()) {
    const auto ext = static_cast<std::size_t>(side_ + 1);
    stride_.assign(d_, 1);
    for (std::size_t t = d_ - 1; t-- > 0;) stride_[t] = stride_[t + 1] * ext;
    std::size_t total = stride_[0] * ext;
    sums_.assign(total, T{0});

    // Copy cells into the (side+1)^d table at offset +1, then sweep each axis.
    for_each_index(a.lower(), a.upper(), [&](const DTuple& i) { sums_[offset(i)] = a[i]; });
    for (std::size_t t = 0; t < d_; ++t) {
      for (std::size_t idx = 0; idx < total; ++idx) {
        const std::size_t coord = (idx / stride_[t]) % ext;
        if (coord > 0) sums_[idx] = sums_[idx] + sums_[idx - stride_[t]];
      }
    }
  }

  std::size_t dim() const { return d_; }
  std::int64_t side() const { return side_; }

  /// Σ A[k] over lo <= k <= hi (inclusive, 1-based).
  T box_sum(const DTuple& lo, const DTuple& hi) const {
    require(lo.size() == d_ && hi.size() == d_, "box dimension mismatch");
    for (std::size_t t = 0; t < d_; ++t)
      require(1 <= lo[t] && lo[t] <= hi[t] && hi[t] <= side_, "box bounds inverted or out of range");
    return box_sum_unchecked(lo, hi);
  }

  /// No bounds validation; callers guarantee 1 <= lo <= hi <= side.
  T box_sum_unchecked(const DTuple& lo, const DTuple& hi) const {
    T total{0};
    const std::size_t corners = std::size_t{1} << d_;
    for (std::size_t mask = 0; mask < corners; ++mask) {
      std::size_t idx = 0;
      bool negative = false;
      for (std::size_t t = 0; t < d_; ++t) {
        if (mask >> t & 1U) {
          idx += static_cast<std::size_t>(hi[t]) * stride_[t];
        } else {
          idx += static_cast<std::size_t>(lo[t] - 1) * stride_[t];
          negative = !negative;
        }
      }
      if (negative)
        total = total - sums_[idx];
      else
        total = total + sums_[idx];
    }
    return total;
  }

 private:
  std::size_t offset(const DTuple& i) const {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < d_; ++t) idx += static_cast<std::size_t>(i[t]) * stride_[t];
    return idx;
  }

  std::size_t d_;
  std::int64_t side_;
  std::vector<std::size_t> stride_;
  std::vector<T> sums_;
};

}  // namespace mwr
