#include <gtest/gtest.h>

#include <random>

#include "mwr/graph/solvers.hpp"

namespace mwr::graph {
namespace {

EdgeWeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, std::int64_t wmax) {
  return EdgeWeightedGraph::generate(n, [&](std::size_t, std::size_t) {
    return Int{static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * wmax + 1)) - wmax};
  });
}

TEST(MaxClique, UnitK4) {
  auto g = EdgeWeightedGraph::generate(4, [](std::size_t, std::size_t) { return Int{1}; });
  EXPECT_EQ(max_weight_clique(g, 3).value, 3);
}

TEST(MaxClique, IndexSumWeights) {
  // w(i,j) = i + j with 1-based labels.
  auto g = EdgeWeightedGraph::generate(4, [](std::size_t u, std::size_t v) { return Int{static_cast<std::int64_t>(u + v + 2)}; });
  auto s = max_weight_clique(g, 3);
  EXPECT_EQ(s.value, 18);
  EXPECT_EQ(s.vertices, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(MaxClique, PairsAreEdges) {
  std::mt19937_64 rng(3);
  auto g = random_graph(rng, 6, 9);
  EXPECT_EQ(max_weight_clique(g, 2).value, g.max_weight());
}

TEST(MaxClique, TieBreakIsLexicographic) {
  auto g = EdgeWeightedGraph::generate(5, [](std::size_t, std::size_t) { return Int{0}; });
  EXPECT_EQ(max_weight_clique(g, 3).vertices, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(MaxClique, RejectsBadSize) {
  auto g = EdgeWeightedGraph::generate(3, [](std::size_t, std::size_t) { return Int{1}; });
  EXPECT_THROW(max_weight_clique(g, 4), DomainError);
  EXPECT_THROW(max_weight_clique(g, 1), DomainError);
  auto p = EdgeWeightedGraph::generate_partite(3, 2, [](std::size_t, std::size_t) { return Int{1}; });
  EXPECT_THROW(max_weight_clique(p, 2), DomainError);
}

TEST(MaxClique, ShiftMovesOptimumByEdgeCount) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + rng() % 4, k = 2 + rng() % 3;
    auto g = random_graph(rng, n, 10);
    const Int s = 7;
    auto shifted = EdgeWeightedGraph::generate(n, [&](std::size_t u, std::size_t v) { return g.weight(u, v) + s; });
    auto a = max_weight_clique(g, k), b = max_weight_clique(shifted, k);
    ASSERT_EQ(b.value, a.value + s * static_cast<std::int64_t>(k * (k - 1) / 2));
    ASSERT_EQ(clique_weight(shifted, b.vertices), b.value);
  }
}

TEST(MaxClique, PartiteTransversal) {
  // Parts {0,1}, {2,3}; heaviest edge 0-1 lies inside a part and is excluded.
  std::vector<Int> m(16, Int{0});
  auto set = [&](std::size_t u, std::size_t v, std::int64_t w) { m[u * 4 + v] = m[v * 4 + u] = w; };
  set(0, 1, 100);
  set(0, 2, 3);
  set(1, 3, 5);
  EdgeWeightedGraph g(4, m, EdgeWeightedGraph::block_parts(2, 2));
  auto s = max_weight_clique(g, 2);
  EXPECT_EQ(s.value, 5);
  EXPECT_EQ(s.vertices, (std::vector<std::size_t>{1, 3}));
}

TEST(Graph, Validation) {
  EXPECT_THROW(EdgeWeightedGraph(2, {0, 1, 2, 0}), DomainError);
  EXPECT_THROW(EdgeWeightedGraph(3, std::vector<Int>(9, Int{0}), std::vector<std::size_t>{0, 0, 1}), DomainError);
  EXPECT_THROW(EdgeWeightedGraph::from_upper_triangle(3, {1, 2}), DomainError);
  auto g = EdgeWeightedGraph::from_upper_triangle(3, {1, 2, 3});
  EXPECT_EQ(g.weight(0, 2), 2);
  EXPECT_EQ(g.weight(2, 1), 3);
  EXPECT_EQ(g.upper_triangle(), (std::vector<Int>{1, 2, 3}));
}

TEST(Triangle, AllZero) {
  auto g = EdgeWeightedGraph::generate(4, [](std::size_t, std::size_t) { return Int{0}; });
  auto r = max_weight_triangle(g);
  EXPECT_EQ(r.max.value, 0);
  EXPECT_FALSE(r.has_positive);
  EXPECT_FALSE(r.has_negative);
}

TEST(Triangle, SingleTriangle) {
  auto g = EdgeWeightedGraph::from_upper_triangle(3, {1, 1, -1});
  auto r = max_weight_triangle(g);
  EXPECT_EQ(r.max.value, 1);
  EXPECT_TRUE(r.has_positive);
  EXPECT_FALSE(r.has_negative);
  auto neg = max_weight_triangle(EdgeWeightedGraph::from_upper_triangle(3, {-1, -1, 1}));
  EXPECT_FALSE(neg.has_positive);
  EXPECT_TRUE(neg.has_negative);
  EXPECT_THROW(max_weight_triangle(EdgeWeightedGraph::from_upper_triangle(2, {1})), DomainError);
}

TEST(TwoKSubgraph, SinglePairIsZero) {
  auto g = EdgeWeightedGraph::generate_partite(2, 3, [](std::size_t u, std::size_t v) { return Int{static_cast<std::int64_t>(u * v) + 1}; });
  EXPECT_EQ(max_weight_2k_subgraph(g).value, 0);
}

TEST(TwoKSubgraph, UniformWeights) {
  // 4-clique minus the two matching edges leaves 4 edges.
  for (std::int64_t c : {1, 3, -2}) {
    auto g = EdgeWeightedGraph::generate_partite(4, 2, [&](std::size_t, std::size_t) { return Int{c}; });
    EXPECT_EQ(max_weight_2k_subgraph(g).value, 4 * c);
  }
}

TEST(TwoKSubgraph, WitnessReevaluates) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = 2 + rng() % 2, n = 1 + rng() % 3;
    auto g = EdgeWeightedGraph::generate_partite(2 * k, n, [&](std::size_t, std::size_t) {
      return Int{static_cast<std::int64_t>(rng() % 21) - 10};
    });
    auto s = max_weight_2k_subgraph(g);
    ASSERT_EQ(subgraph_weight(g, s.unprimed, s.primed), s.value);
    for (std::size_t i = 0; i < k; ++i) {
      ASSERT_EQ(g.part_of(s.unprimed[i]), i);
      ASSERT_EQ(g.part_of(s.primed[i]), k + i);
    }
  }
}

TEST(TwoKSubgraph, RejectsOddParts) {
  auto g = EdgeWeightedGraph::generate_partite(3, 2, [](std::size_t, std::size_t) { return Int{1}; });
  EXPECT_THROW(max_weight_2k_subgraph(g), DomainError);
}

}  // namespace
}  // namespace mwr::graph
