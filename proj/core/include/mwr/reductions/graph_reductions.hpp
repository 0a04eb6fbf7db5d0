#pragma once

#include <cstddef>
#include <vector>

#include "mwr/graph/solvers.hpp"
#include "mwr/reductions/certificate.hpp"

namespace mwr::reductions {

/// Weight between two copies of the same original vertex.
enum class SameVertex {
  kPenalty,  // -(2·C(parts,2)·W + 1): optimal transversals never repeat a vertex
  kZero,     // repeats allowed at weight 0, the literal copy construction
};

/// `parts` copies of every vertex; copy (p, v) is vertex p·n + v and lies in
/// part p. Different vertices keep their original weight across parts.
Reduction<graph::EdgeWeightedGraph> clique_to_kpartite(const graph::EdgeWeightedGraph& g, std::size_t parts,
                                                       SameVertex same = SameVertex::kPenalty);

/// Original vertex of a copy produced by clique_to_kpartite.
std::size_t original_vertex(const ReductionCertificate& cert, std::size_t copy);

/// (d + ⌊d/2⌋)-partite clique instance to the 2d-part subgraph problem.
/// Output parts 0..d-1 are V_1..V_d (source parts 0..d-1), part d+i-1 is V'_i:
/// for i <= ⌊d/2⌋ the source part d+i-1, then copies V'_{i+⌊d/2⌋} of those,
/// then an all-zero V'_d when d is odd. Certificate: a = 1, b = 0.
Reduction<graph::EdgeWeightedGraph> clique_to_subgraph_instance(const graph::EdgeWeightedGraph& g, std::size_t d,
                                                                Mode mode = Mode::kTight);

/// Source clique (sorted source vertex ids) selected by a subgraph choice.
std::vector<std::size_t> clique_from_subgraph(const ReductionCertificate& cert, const graph::SubgraphSolution& s);

}  // namespace mwr::reductions
