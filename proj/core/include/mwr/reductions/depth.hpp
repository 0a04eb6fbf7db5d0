#pragma once

#include <vector>

#include "mwr/core/weighted_sets.hpp"
#include "mwr/geometry/geometry.hpp"
#include "mwr/graph/graph.hpp"
#include "mwr/reductions/certificate.hpp"

namespace mwr::reductions {

/// One box per ordered vertex pair u != v and ordered axis pair i != j:
/// x_i ∈ [u,u+1), x_j ∈ [v,v+1), other axes [0,n), weight w(u,v) + s.
/// s = max(0, (P-1)·max w - P·min w + 1) with P = C(d,2), which makes every
/// point with d distinct floors outweigh every point with a repeat.
/// Certificate: a = 2, b = 2·s·P against the max d-clique.
Reduction<WeightedBoxSet> clique_to_weighted_depth(const graph::EdgeWeightedGraph& g, std::size_t d);

/// The shift s used above.
Int depth_shift(const graph::EdgeWeightedGraph& g, std::size_t d);

/// Vertices ⌊p_t⌋ of a deepest point (sorted). Throws DecodeError on a
/// point outside [0,n)^d or with repeated floors.
std::vector<std::size_t> clique_from_depth_point(const ReductionCertificate& cert, const DTuple& p);

}  // namespace mwr::reductions
