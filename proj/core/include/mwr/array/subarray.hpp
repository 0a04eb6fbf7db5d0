#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mwr/core/dense_array.hpp"
#include "mwr/core/prefix_sum.hpp"

namespace mwr::array {

/// Inclusive cell range lo..hi (1-based) and its sum.
template <class T = Int>
struct SubarraySolution {
  DTuple lo;
  DTuple hi;
  T value;
};

namespace detail {

inline bool witness_less(const DTuple& lo_a, const DTuple& hi_a, const DTuple& lo_b, const DTuple& hi_b) {
  if (lo_a != lo_b) return lo_a < lo_b;
  return hi_a < hi_b;
}

template <class T>
void offer(std::optional<SubarraySolution<T>>& best, DTuple lo, DTuple hi, const T& value) {
  if (!best || value > best->value || (value == best->value && witness_less(lo, hi, best->lo, best->hi)))
    best = SubarraySolution<T>{std::move(lo), std::move(hi), value};
}

template <class T>
struct Run {
  std::size_t lo, hi;  // 0-based, inclusive
  T value;
};

// Kadane over a 1-D slice. Each running interval keeps the earliest start
// among equal sums, so ties resolve to the smallest (lo, hi).
template <class T>
Run<T> kadane_run(std::span<const T> xs) {
  T run{0};
  T best{0};
  std::size_t start = 0, best_lo = 0, best_hi = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k == 0 || run < 0) {
      run = xs[k];
      start = k;
    } else {
      run = run + xs[k];
    }
    if (k == 0 || run > best || (run == best && start < best_lo)) {
      best = run;
      best_lo = start;
      best_hi = k;
    }
  }
  return {best_lo, best_hi, best};
}

template <class T>
SubarraySolution<T> kadane(std::span<const T> xs) {
  auto r = kadane_run(xs);
  return {DTuple{static_cast<std::int64_t>(r.lo) + 1}, DTuple{static_cast<std::int64_t>(r.hi) + 1}, std::move(r.value)};
}

// Row ranges [a, b] collapse onto one accumulator row scanned by Kadane.
template <class T>
SubarraySolution<T> collapse2(std::span<const T> data, std::size_t n) {
  std::optional<Run<T>> best;
  std::size_t best_a = 0, best_b = 0;
  std::vector<T> acc(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(acc.begin(), acc.end(), T{0});
    for (std::size_t b = a; b < n; ++b) {
      const T* row = data.data() + b * n;
      for (std::size_t c = 0; c < n; ++c) acc[c] = acc[c] + row[c];
      auto r = kadane_run<T>(acc);
      // Iteration is in increasing a, then b: on equal value only a smaller
      // column start (same a) or the same start with a smaller (b, hi) wins.
      bool take = !best || r.value > best->value;
      if (!take && r.value == best->value && a == best_a)
        take = r.lo < best->lo || (r.lo == best->lo && (b < best_b || (b == best_b && r.hi < best->hi)));
      if (take) {
        best = std::move(r);
        best_a = a;
        best_b = b;
      }
    }
  }
  auto one = [](std::size_t x) { return static_cast<std::int64_t>(x) + 1; };
  return {DTuple{one(best_a), one(best->lo)}, DTuple{one(best_b), one(best->hi)}, std::move(best->value)};
}

// Collapses the leading axis over every range [a, b] and recurses on the
// remaining d-1 axes: O(n^{2d-1}) time, one (d-1)-dimensional accumulator
// per recursion level.
template <class T>
SubarraySolution<T> collapse(std::span<const T> data, std::size_t d, std::size_t n) {
  if (d == 1) return kadane(data);
  if (d == 2) return collapse2(data, n);
  const std::size_t plane = data.size() / n;
  std::optional<SubarraySolution<T>> best;
  std::vector<T> acc(plane);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(acc.begin(), acc.end(), T{0});
    for (std::size_t b = a; b < n; ++b) {
      const T* row = data.data() + b * plane;
      for (std::size_t c = 0; c < plane; ++c) acc[c] = acc[c] + row[c];
      auto inner = collapse<T>(acc, d - 1, n);
      std::vector<std::int64_t> lo{static_cast<std::int64_t>(a) + 1};
      std::vector<std::int64_t> hi{static_cast<std::int64_t>(b) + 1};
      lo.insert(lo.end(), inner.lo.begin(), inner.lo.end());
      hi.insert(hi.end(), inner.hi.begin(), inner.hi.end());
      offer(best, DTuple(std::move(lo)), DTuple(std::move(hi)), inner.value);
    }
  }
  return *best;
}

}  // namespace detail

/// Maximum-sum nonempty box. Kadane for d = 1; for d >= 2 every range of
/// the leading d-1 axes is collapsed and scanned with Kadane, O(n^{2d-1}).
template <class T>
SubarraySolution<T> max_subarray(const DenseArray<T>& a) {
  require(a.size() > 0, "max_subarray needs a nonempty array");
  return detail::collapse<T>(a.data(), a.dim(), static_cast<std::size_t>(a.side()));
}

/// Direct enumeration of all O(n^{2d}) boxes with prefix-sum lookups.
template <class T>
SubarraySolution<T> max_subarray_bruteforce(const DenseArray<T>& a) {
  require(a.size() > 0, "max_subarray needs a nonempty array");
  const PrefixSumIndex<T> ps(a);
  std::optional<SubarraySolution<T>> best;
  for_each_index(a.lower(), a.upper(), [&](const DTuple& lo) {
    for_each_index(lo, a.upper(), [&](const DTuple& hi) {
      T v = ps.box_sum_unchecked(lo, hi);
      if (!best || v > best->value) best = SubarraySolution<T>{lo, hi, std::move(v)};
    });
  });
  return *best;
}

/// Best cube [i, i+Δ·1] over corners i and Δ in {0..n-1}: O(n^{d+1}).
template <class T>
SubarraySolution<T> max_square_subarray(const DenseArray<T>& a) {
  require(a.size() > 0, "max_square_subarray needs a nonempty array");
  const PrefixSumIndex<T> ps(a);
  const std::size_t d = a.dim();
  std::optional<SubarraySolution<T>> best;
  for_each_index(a.lower(), a.upper(), [&](const DTuple& lo) {
    std::int64_t room = a.side();
    for (auto x : lo) room = std::min(room, a.side() - x);
    for (std::int64_t delta = 0; delta <= room; ++delta) {
      DTuple hi = lo + DTuple(d, delta);
      T v = ps.box_sum_unchecked(lo, hi);
      if (!best || v > best->value) best = SubarraySolution<T>{lo, std::move(hi), std::move(v)};
    }
  });
  return *best;
}

/// Maximizer of B[i,j] + B[i',j'] - B[i,j'] - B[i',j] (1-based).
template <class T = Int>
struct FourCombination {
  std::int64_t i, j, i2, j2;
  T value;
};

/// O(m^4) enumeration over i <= i', j <= j' (strict inequalities when
/// `strict` is set). Ties go to the lexicographically smallest (i, j, i', j').
template <class T>
FourCombination<T> max_4combination(const DenseArray<T>& b, bool strict = false) {
  require(b.dim() == 2, "4-combination needs a matrix");
  const std::int64_t m = b.side();
  require(!strict || m >= 2, "strict 4-combination needs at least a 2x2 matrix");
  const std::int64_t gap = strict ? 1 : 0;
  std::optional<FourCombination<T>> best;
  auto at = [&](std::int64_t r, std::int64_t c) -> const T& {
    return b.data()[static_cast<std::size_t>((r - 1) * m + (c - 1))];
  };
  for (std::int64_t i = 1; i <= m; ++i)
    for (std::int64_t j = 1; j <= m; ++j)
      for (std::int64_t i2 = i + gap; i2 <= m; ++i2)
        for (std::int64_t j2 = j + gap; j2 <= m; ++j2) {
          T v = at(i, j) + at(i2, j2) - at(i, j2) - at(i2, j);
          if (!best || v > best->value) best = FourCombination<T>{i, j, i2, j2, std::move(v)};
        }
  return *best;
}

}  // namespace mwr::array
