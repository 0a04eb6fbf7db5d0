#include "mwr/graph/solvers.hpp"

#include <algorithm>
#include <optional>

namespace mwr::graph {
namespace {

struct Best {
  std::optional<Int> value;
  std::vector<std::size_t> vertices;

  void offer(Int v, std::vector<std::size_t> sorted_vertices) {
    if (!value || v > *value || (v == *value && sorted_vertices < vertices)) {
      value = v;
      vertices = std::move(sorted_vertices);
    }
  }
};

// Combinations in lexicographic order; `partial` is the weight of the
// clique on chosen[0..depth).
void enumerate_subsets(const EdgeWeightedGraph& g, std::size_t k, std::size_t start, std::vector<std::size_t>& chosen,
                       Int partial, Best& best) {
  if (chosen.size() == k) {
    best.offer(partial, chosen);
    return;
  }
  const std::size_t n = g.size();
  for (std::size_t v = start; v + (k - chosen.size()) <= n; ++v) {
    Int add{0};
    for (auto u : chosen) add += g.weight(u, v);
    chosen.push_back(v);
    enumerate_subsets(g, k, v + 1, chosen, partial + add, best);
    chosen.pop_back();
  }
}

void enumerate_transversals(const EdgeWeightedGraph& g, std::vector<std::size_t>& chosen, Int partial, Best& best) {
  const std::size_t p = chosen.size();
  if (p == g.part_count()) {
    auto sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    best.offer(partial, std::move(sorted));
    return;
  }
  for (auto v : g.members(p)) {
    Int add{0};
    for (auto u : chosen) add += g.weight(u, v);
    chosen.push_back(v);
    enumerate_transversals(g, chosen, partial + add, best);
    chosen.pop_back();
  }
}

}  // namespace

CliqueSolution max_weight_clique(const EdgeWeightedGraph& g, std::size_t k) {
  require(k >= 2, "clique size must be at least 2");
  require(k <= g.size(), "clique size exceeds vertex count");
  Best best;
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  if (g.is_partite()) {
    require(k == g.part_count(), "partite clique size must equal the part count");
    enumerate_transversals(g, chosen, Int{0}, best);
  } else {
    enumerate_subsets(g, k, 0, chosen, Int{0}, best);
  }
  return {std::move(best.vertices), *best.value};
}

TriangleReport max_weight_triangle(const EdgeWeightedGraph& g) {
  require(g.size() >= 3, "triangle search needs at least 3 vertices");
  const auto plain = g.without_parts();
  TriangleReport report;
  report.max = max_weight_clique(plain, 3);
  report.has_positive = report.max.value > 0;
  const auto negated = EdgeWeightedGraph::generate(plain.size(), [&](std::size_t u, std::size_t v) { return -plain.weight(u, v); });
  report.has_negative = max_weight_clique(negated, 3).value > 0;
  return report;
}

Int subgraph_weight(const EdgeWeightedGraph& g, const std::vector<std::size_t>& unprimed,
                    const std::vector<std::size_t>& primed) {
  require(unprimed.size() == primed.size(), "subgraph choice needs one primed vertex per unprimed one");
  std::vector<std::size_t> all = unprimed;
  all.insert(all.end(), primed.begin(), primed.end());
  Int total = clique_weight(g, all);
  for (std::size_t i = 0; i < unprimed.size(); ++i) total -= g.weight(unprimed[i], primed[i]);
  return total;
}

SubgraphSolution max_weight_2k_subgraph(const EdgeWeightedGraph& g) {
  require(g.is_partite() && g.part_count() % 2 == 0 && g.part_count() >= 2,
          "2k-subgraph instance needs an even number (>= 2) of equal parts");
  const std::size_t k = g.part_count() / 2;
  const std::size_t parts = g.part_count();

  std::optional<Int> best;
  std::vector<std::size_t> best_choice;
  std::vector<std::size_t> chosen;
  chosen.reserve(parts);

  // Part order 0..2k-1; an edge counts unless it pairs part i with part k+i.
  auto recurse = [&](auto&& self, Int partial) -> void {
    const std::size_t p = chosen.size();
    if (p == parts) {
      if (!best || partial > *best) {
        best = partial;
        best_choice = chosen;
      }
      return;
    }
    for (auto v : g.members(p)) {
      Int add{0};
      for (std::size_t q = 0; q < p; ++q)
        if (!(p >= k && q == p - k)) add += g.weight(chosen[q], v);
      chosen.push_back(v);
      self(self, partial + add);
      chosen.pop_back();
    }
  };
  recurse(recurse, Int{0});

  SubgraphSolution sol;
  sol.unprimed.assign(best_choice.begin(), best_choice.begin() + static_cast<std::ptrdiff_t>(k));
  sol.primed.assign(best_choice.begin() + static_cast<std::ptrdiff_t>(k), best_choice.end());
  sol.value = *best;
  return sol;
}

}  // namespace mwr::graph
