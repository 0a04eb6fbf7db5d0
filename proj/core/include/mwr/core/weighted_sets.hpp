#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "mwr/core/checked_int.hpp"
#include "mwr/core/dtuple.hpp"

namespace mwr {

struct WeightedPoint {
  DTuple coords;
  Int weight;

  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
  friend auto operator<=>(const WeightedPoint& a, const WeightedPoint& b) {
    if (auto c = a.coords <=> b.coords; c != 0) return c;
    return a.weight <=> b.weight;
  }
};

/// Weighted points in d dimensions. Coincident points are allowed; their
/// weights add.
class WeightedPointSet {
 public:
  explicit WeightedPointSet(std::size_t d, std::vector<WeightedPoint> points = {}) : d_(d), points_(std::move(points)) {
    require(d >= 1, "point dimension must be positive");
    for (const auto& p : points_) require(p.coords.size() == d_, "point has wrong dimension");
  }

  std::size_t dim() const { return d_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<WeightedPoint>& points() const { return points_; }

  /// Same points in canonical (coordinate, weight) order.
  WeightedPointSet sorted() const {
    auto pts = points_;
    std::sort(pts.begin(), pts.end());
    return WeightedPointSet(d_, std::move(pts));
  }

  friend bool operator==(const WeightedPointSet&, const WeightedPointSet&) = default;

 private:
  std::size_t d_;
  std::vector<WeightedPoint> points_;
};

struct WeightedBox {
  DTuple lo;
  DTuple hi;  // exclusive
  Int weight;

  /// Half-open containment [lo_t, hi_t) on every axis.
  bool contains(const DTuple& p) const {
    for (std::size_t t = 0; t < lo.size(); ++t)
      if (p[t] < lo[t] || p[t] >= hi[t]) return false;
    return true;
  }

  friend bool operator==(const WeightedBox&, const WeightedBox&) = default;
  friend auto operator<=>(const WeightedBox& a, const WeightedBox& b) {
    if (auto c = a.lo <=> b.lo; c != 0) return c;
    if (auto c = a.hi <=> b.hi; c != 0) return c;
    return a.weight <=> b.weight;
  }
};

/// Weighted half-open axis-aligned boxes in d dimensions.
class WeightedBoxSet {
 public:
  explicit WeightedBoxSet(std::size_t d, std::vector<WeightedBox> boxes = {}) : d_(d), boxes_(std::move(boxes)) {
    require(d >= 1, "box dimension must be positive");
    for (const auto& b : boxes_) {
      require(b.lo.size() == d_ && b.hi.size() == d_, "box has wrong dimension");
      for (std::size_t t = 0; t < d_; ++t) require(b.lo[t] < b.hi[t], "degenerate box: lo must be < hi on every axis");
    }
  }

  std::size_t dim() const { return d_; }
  std::size_t size() const { return boxes_.size(); }
  const std::vector<WeightedBox>& boxes() const { return boxes_; }

  WeightedBoxSet sorted() const {
    auto b = boxes_;
    std::sort(b.begin(), b.end());
    return WeightedBoxSet(d_, std::move(b));
  }

  friend bool operator==(const WeightedBoxSet&, const WeightedBoxSet&) = default;

 private:
  std::size_t d_;
  std::vector<WeightedBox> boxes_;
};

}  // namespace mwr
