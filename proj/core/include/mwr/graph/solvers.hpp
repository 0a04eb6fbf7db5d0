#pragma once

#include <cstddef>
#include <vector>

#include "mwr/graph/graph.hpp"

namespace mwr::graph {

struct CliqueSolution {
  std::vector<std::size_t> vertices;  // sorted
  Int value;
};

/// Maximum total edge weight over k-vertex cliques. On a partitioned graph
/// k must equal the part count and one vertex is taken from each part.
/// Ties go to the lexicographically smallest sorted vertex sequence.
CliqueSolution max_weight_clique(const EdgeWeightedGraph& g, std::size_t k);

struct TriangleReport {
  CliqueSolution max;
  bool has_negative = false;
  bool has_positive = false;
};

/// Triangle oracle on the underlying complete graph (parts are ignored).
TriangleReport max_weight_triangle(const EdgeWeightedGraph& g);

/// Choice for the clique-without-matching problem: unprimed[i] is taken
/// from part i (V_{i+1}), primed[i] from part k+i (V'_{i+1}).
struct SubgraphSolution {
  std::vector<std::size_t> unprimed;
  std::vector<std::size_t> primed;
  Int value;
};

/// Weight of the 2k-clique on the chosen vertices minus the k matching
/// edges (v_i, v'_i).
Int subgraph_weight(const EdgeWeightedGraph& g, const std::vector<std::size_t>& unprimed,
                    const std::vector<std::size_t>& primed);

/// Exhaustive O(n^{2k}) search over one vertex per part of a 2k-partite
/// graph whose parts 0..k-1 are V_1..V_k and parts k..2k-1 are V'_1..V'_k.
SubgraphSolution max_weight_2k_subgraph(const EdgeWeightedGraph& g);

}  // namespace mwr::graph
