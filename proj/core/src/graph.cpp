#include "mwr/graph/graph.hpp"

#include <algorithm>

namespace mwr::graph {

EdgeWeightedGraph::EdgeWeightedGraph(std::size_t n, std::vector<Int> matrix, std::optional<std::vector<std::size_t>> parts)
    : n_(n), w_(std::move(matrix)), parts_(std::move(parts)) {
  require(w_.size() == n_ * n_, "weight matrix must be n x n");
  for (std::size_t u = 0; u < n_; ++u) {
    w_[u * n_ + u] = Int{0};
    for (std::size_t v = u + 1; v < n_; ++v)
      require(w_[u * n_ + v] == w_[v * n_ + u], "weight matrix must be symmetric");
  }
  if (!parts_) {
    members_.assign(1, {});
    for (std::size_t v = 0; v < n_; ++v) members_[0].push_back(v);
    return;
  }
  require(parts_->size() == n_, "every vertex needs exactly one part");
  require(n_ > 0, "a partitioned graph needs vertices");
  part_count_ = *std::max_element(parts_->begin(), parts_->end()) + 1;
  members_.assign(part_count_, {});
  for (std::size_t v = 0; v < n_; ++v) members_[(*parts_)[v]].push_back(v);
  for (const auto& m : members_) require(m.size() == members_[0].size(), "all parts must have identical cardinality");
}

EdgeWeightedGraph EdgeWeightedGraph::from_upper_triangle(std::size_t n, const std::vector<Int>& upper,
                                                         std::optional<std::vector<std::size_t>> parts) {
  require(upper.size() == n * (n > 0 ? n - 1 : 0) / 2, "upper triangle must hold n(n-1)/2 weights");
  std::vector<Int> m(n * n, Int{0});
  std::size_t k = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++k) m[u * n + v] = m[v * n + u] = upper[k];
  return EdgeWeightedGraph(n, std::move(m), std::move(parts));
}

std::vector<std::size_t> EdgeWeightedGraph::block_parts(std::size_t part_count, std::size_t part_size) {
  std::vector<std::size_t> parts(part_count * part_size);
  for (std::size_t v = 0; v < parts.size(); ++v) parts[v] = v / part_size;
  return parts;
}

Int EdgeWeightedGraph::max_abs_weight() const {
  Int best{0};
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v) best = std::max(best, abs(weight(u, v)));
  return best;
}

Int EdgeWeightedGraph::min_weight() const {
  require(n_ >= 2, "graph has no edges");
  Int best = weight(0, 1);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v) best = std::min(best, weight(u, v));
  return best;
}

Int EdgeWeightedGraph::max_weight() const {
  require(n_ >= 2, "graph has no edges");
  Int best = weight(0, 1);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v) best = std::max(best, weight(u, v));
  return best;
}

std::vector<Int> EdgeWeightedGraph::upper_triangle() const {
  std::vector<Int> out;
  out.reserve(n_ * (n_ > 0 ? n_ - 1 : 0) / 2);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v) out.push_back(weight(u, v));
  return out;
}

Int clique_weight(const EdgeWeightedGraph& g, const std::vector<std::size_t>& vertices) {
  Int total{0};
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b) total += g.weight(vertices[a], vertices[b]);
  return total;
}

}  // namespace mwr::graph
