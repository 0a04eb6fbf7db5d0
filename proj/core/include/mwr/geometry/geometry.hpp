#pragma once

#include "mwr/core/weighted_sets.hpp"

namespace mwr::geometry {

/// Closed box [lo, hi]. When `empty` is set the optimum is the empty box
/// (value 0) and lo/hi carry no coordinates.
struct RectangleSolution {
  DTuple lo;
  DTuple hi;
  Int value;
  bool empty = false;
};

/// Representative point of an optimal cell and its depth.
struct DepthSolution {
  DTuple point;
  Int value;
};

/// Max-weight closed axis-aligned box over the compressed coordinate grid.
/// d = 2 goes through the 2-D max-subarray solver, other d through
/// prefix-sum enumeration.
RectangleSolution max_weight_rectangle(const WeightedPointSet& points);

/// Total weight of the points inside the closed box [lo, hi].
Int rectangle_weight(const WeightedPointSet& points, const DTuple& lo, const DTuple& hi);

/// Deepest point of a set of half-open weighted boxes. Empty space counts as
/// depth 0, so the value is never negative.
DepthSolution weighted_depth(const WeightedBoxSet& boxes);

/// Total weight of the boxes containing p.
Int depth_at(const WeightedBoxSet& boxes, const DTuple& p);

}  // namespace mwr::geometry
