#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mwr::harness {

/// Least-squares line through (log n, log t).
struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  double ci_low = 0;   // 95% t-interval on the slope
  double ci_high = 0;
};

SlopeFit fit_loglog(const std::vector<double>& sizes, const std::vector<double>& seconds);

struct BenchReport {
  std::string op;
  std::vector<std::int64_t> sizes;
  std::size_t reps = 0;
  std::vector<double> median_seconds;
  SlopeFit fit;
  double window_low = 0, window_high = 0;  // expected exponent window

  bool in_window() const { return fit.slope >= window_low && fit.slope <= window_high; }
};

/// Known ops: subarray2d, kadane, square2d.
std::vector<std::string> bench_ops();

/// Times `op` on a deterministic input per size. Each repetition loops the
/// call until at least `min_seconds` have passed; the median over
/// repetitions is fitted. Fewer than 3 sizes raises UsageError.
BenchReport bench(std::string_view op, const std::vector<std::int64_t>& sizes, std::size_t reps,
                  double min_seconds = 0.02);

}  // namespace mwr::harness
