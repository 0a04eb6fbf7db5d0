#pragma once

#include <cstddef>
#include <vector>

#include "mwr/geometry/geometry.hpp"
#include "mwr/graph/graph.hpp"
#include "mwr/reductions/certificate.hpp"

namespace mwr::reductions {

/// (d×k)-partite clique to Max-Weight Rectangle. Part P_{ij} (1-based i, j)
/// is graph part (i-1)·k + (j-1); the digit x_{ij} of corner coordinate x_i
/// (most significant first, base n) selects the vertex of P_{ij}.
/// Certificate: a = 1, b = (d+1)·C.
Reduction<WeightedPointSet> kpartite_clique_to_rectangle(const graph::EdgeWeightedGraph& g, std::size_t k,
                                                         std::size_t d);

/// Closed-form number of emitted points (zero-weight gadget points included);
/// at most (6d + 4·C(d,2)·k²)·n^{k+1} + 1.
std::size_t rectangle_point_census(std::int64_t n, std::size_t k, std::size_t d);

/// Decodes an optimal box into one graph vertex per part, in part order.
/// Throws DecodeError when the box does not satisfy the restricted form.
std::vector<std::size_t> recover_clique_from_rectangle(const ReductionCertificate& cert,
                                                       const geometry::RectangleSolution& box);

}  // namespace mwr::reductions
