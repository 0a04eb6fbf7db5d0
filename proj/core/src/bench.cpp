#include "mwr/harness/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include <boost/math/distributions/students_t.hpp>

#include "mwr/array/subarray.hpp"
#include "mwr/harness/generate.hpp"

namespace mwr::harness {
namespace {

struct OpSpec {
  std::string name;
  std::size_t d;
  double lo, hi;
  std::function<std::int64_t(const DenseArray<Int>&)> run;
};

const std::vector<OpSpec>& ops() {
  static const std::vector<OpSpec> table = {
      {"subarray2d", 2, 2.5, 3.5, [](const DenseArray<Int>& a) { return array::max_subarray(a).value.get(); }},
      {"kadane", 1, 0.8, 1.3, [](const DenseArray<Int>& a) { return array::max_subarray(a).value.get(); }},
      {"square2d", 2, 2.5, 3.5, [](const DenseArray<Int>& a) { return array::max_square_subarray(a).value.get(); }},
  };
  return table;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size();
  return m % 2 == 1 ? xs[m / 2] : 0.5 * (xs[m / 2 - 1] + xs[m / 2]);
}

}  // namespace

SlopeFit fit_loglog(const std::vector<double>& sizes, const std::vector<double>& seconds) {
  if (sizes.size() < 3 || sizes.size() != seconds.size()) throw UsageError("slope fit needs at least 3 sizes");
  const auto m = static_cast<double>(sizes.size());
  std::vector<double> x, y;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    require(sizes[i] > 0 && seconds[i] > 0, "sizes and times must be positive");
    x.push_back(std::log(sizes[i]));
    y.push_back(std::log(seconds[i]));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i] / m;
    my += y[i] / m;
  }
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  require(sxx > 0, "sizes must not all be equal");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ssr += r * r;
  }
  const double se = std::sqrt(ssr / (m - 2) / sxx);
  const double tq = boost::math::quantile(boost::math::students_t(m - 2), 0.975);
  fit.ci_low = fit.slope - tq * se;
  fit.ci_high = fit.slope + tq * se;
  return fit;
}

std::vector<std::string> bench_ops() {
  std::vector<std::string> names;
  for (const auto& op : ops()) names.push_back(op.name);
  return names;
}

BenchReport bench(std::string_view op, const std::vector<std::int64_t>& sizes, std::size_t reps, double min_seconds) {
  const auto it = std::find_if(ops().begin(), ops().end(), [&](const OpSpec& s) { return s.name == op; });
  if (it == ops().end()) throw UsageError("unknown bench op '" + std::string(op) + "'");
  if (sizes.size() < 3) throw UsageError("bench needs at least 3 sizes");
  if (reps < 1) throw UsageError("bench needs at least one repetition");
  for (auto n : sizes)
    if (n < 1) throw UsageError("bench sizes must be positive");

  BenchReport r;
  r.op = it->name;
  r.sizes = sizes;
  r.reps = reps;
  r.window_low = it->lo;
  r.window_high = it->hi;
  std::vector<DenseArray<Int>> inputs;
  std::vector<double> xs;
  for (auto n : sizes) {
    inputs.push_back(gen_array(it->d, n, static_cast<std::uint64_t>(n), 100));
    xs.push_back(static_cast<double>(n));
  }
  volatile std::int64_t sink = 0;
  for (const auto& a : inputs) sink = sink + it->run(a);  // warm-up
  // Repetitions are interleaved across sizes so drift in machine speed
  // affects every size alike.
  std::vector<std::vector<double>> per_call(sizes.size());
  for (std::size_t rep = 0; rep < reps; ++rep) {
    for (std::size_t s = 0; s < inputs.size(); ++s) {
      std::size_t calls = 0;
      const auto start = std::chrono::steady_clock::now();
      double elapsed = 0;
      do {
        sink = sink + it->run(inputs[s]);
        ++calls;
        elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      } while (elapsed < min_seconds);
      per_call[s].push_back(elapsed / static_cast<double>(calls));
    }
  }
  for (const auto& times : per_call) r.median_seconds.push_back(median(times));
  r.fit = fit_loglog(xs, r.median_seconds);
  return r;
}

}  // namespace mwr::harness
