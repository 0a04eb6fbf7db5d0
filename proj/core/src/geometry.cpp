#include "mwr/geometry/geometry.hpp"

#include <algorithm>
#include <optional>

#include "mwr/array/subarray.hpp"
#include "mwr/core/dense_array.hpp"
#include "mwr/core/prefix_sum.hpp"

namespace mwr::geometry {
namespace {

std::vector<std::int64_t> unique_sorted(std::vector<std::int64_t> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::int64_t rank_of(const std::vector<std::int64_t>& axis, std::int64_t x) {
  return std::lower_bound(axis.begin(), axis.end(), x) - axis.begin();
}

}  // namespace

Int rectangle_weight(const WeightedPointSet& points, const DTuple& lo, const DTuple& hi) {
  Int total{0};
  for (const auto& p : points.points()) {
    bool inside = true;
    for (std::size_t t = 0; t < points.dim() && inside; ++t) inside = lo[t] <= p.coords[t] && p.coords[t] <= hi[t];
    if (inside) total += p.weight;
  }
  return total;
}

RectangleSolution max_weight_rectangle(const WeightedPointSet& points) {
  const std::size_t d = points.dim();
  RectangleSolution none{DTuple{}, DTuple{}, Int{0}, true};
  if (points.size() == 0) return none;

  std::vector<std::vector<std::int64_t>> axes(d);
  for (std::size_t t = 0; t < d; ++t) {
    std::vector<std::int64_t> xs;
    xs.reserve(points.size());
    for (const auto& p : points.points()) xs.push_back(p.coords[t]);
    axes[t] = unique_sorted(std::move(xs));
  }
  std::int64_t side = 0;
  for (const auto& a : axes) side = std::max<std::int64_t>(side, static_cast<std::int64_t>(a.size()));

  // Square grid padded with zeros past each axis's last coordinate.
  auto grid = DenseArray<Int>::filled(d, side, Int{0});
  for (const auto& p : points.points()) {
    DTuple cell(d);
    for (std::size_t t = 0; t < d; ++t) cell[t] = rank_of(axes[t], p.coords[t]) + 1;
    grid[cell] += p.weight;
  }

  array::SubarraySolution<Int> best;
  if (d <= 2)
    best = array::max_subarray(grid);
  else
    best = array::max_subarray_bruteforce(grid);
  if (best.value <= 0) return none;

  // A positive box holds a point on every axis, so lo is inside the real
  // grid; hi may reach into the padding and is clamped.
  RectangleSolution out{DTuple(d), DTuple(d), best.value, false};
  for (std::size_t t = 0; t < d; ++t) {
    const auto m = static_cast<std::int64_t>(axes[t].size());
    out.lo[t] = axes[t][best.lo[t] - 1];
    out.hi[t] = axes[t][std::min(best.hi[t], m) - 1];
  }
  return out;
}

Int depth_at(const WeightedBoxSet& boxes, const DTuple& p) {
  Int total{0};
  for (const auto& b : boxes.boxes())
    if (b.contains(p)) total += b.weight;
  return total;
}

DepthSolution weighted_depth(const WeightedBoxSet& boxes) {
  const std::size_t d = boxes.dim();
  if (boxes.size() == 0) return {DTuple(d, 0), Int{0}};

  std::vector<std::vector<std::int64_t>> axes(d);
  for (std::size_t t = 0; t < d; ++t) {
    std::vector<std::int64_t> xs;
    for (const auto& b : boxes.boxes()) {
      xs.push_back(b.lo[t]);
      xs.push_back(b.hi[t]);
    }
    axes[t] = unique_sorted(std::move(xs));
  }

  // Cell s on axis t is [axes[t][s], axes[t][s+1]); the difference array has
  // one slot per boundary.
  std::vector<std::size_t> stride(d);
  std::size_t total = 1;
  for (std::size_t t = d; t-- > 0;) {
    stride[t] = total;
    total *= axes[t].size();
  }
  std::vector<Int> diff(total, Int{0});
  for (const auto& b : boxes.boxes()) {
    std::vector<std::size_t> lo(d), hi(d);
    for (std::size_t t = 0; t < d; ++t) {
      lo[t] = static_cast<std::size_t>(rank_of(axes[t], b.lo[t]));
      hi[t] = static_cast<std::size_t>(rank_of(axes[t], b.hi[t]));
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      std::size_t at = 0;
      bool odd = false;
      for (std::size_t t = 0; t < d; ++t) {
        const bool up = (mask >> t) & 1;
        at += (up ? hi[t] : lo[t]) * stride[t];
        odd ^= up;
      }
      if (odd)
        diff[at] -= b.weight;
      else
        diff[at] += b.weight;
    }
  }
  for (std::size_t t = 0; t < d; ++t) {
    const std::size_t m = axes[t].size();
    for (std::size_t at = 0; at < total; ++at)
      if ((at / stride[t]) % m != 0) diff[at] += diff[at - stride[t]];
  }

  std::optional<std::size_t> best;
  for (std::size_t at = 0; at < total; ++at) {
    bool cell = true;
    for (std::size_t t = 0; t < d && cell; ++t) cell = (at / stride[t]) % axes[t].size() + 1 < axes[t].size();
    if (cell && (!best || diff[at] > diff[*best])) best = at;
  }

  if (!best || diff[*best] <= 0) {
    DTuple outside(d);
    for (std::size_t t = 0; t < d; ++t) outside[t] = axes[t].front() - 1;
    return {std::move(outside), Int{0}};
  }
  DTuple point(d);
  for (std::size_t t = 0; t < d; ++t) point[t] = axes[t][(*best / stride[t]) % axes[t].size()];
  return {std::move(point), diff[*best]};
}

}  // namespace mwr::geometry
