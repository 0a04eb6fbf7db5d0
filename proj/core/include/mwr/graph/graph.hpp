#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mwr/core/checked_int.hpp"
#include "mwr/core/errors.hpp"

namespace mwr::graph {

/// Complete undirected graph with integer edge weights, optionally split
/// into labeled parts of equal size. Vertices are 0-based. The diagonal of
/// the weight matrix is unused and kept at zero.
class EdgeWeightedGraph {
 public:
  EdgeWeightedGraph(std::size_t n, std::vector<Int> matrix, std::optional<std::vector<std::size_t>> parts = std::nullopt);

  /// Weights given as the strict upper triangle, row-major: (0,1), (0,2), ..., (n-2,n-1).
  static EdgeWeightedGraph from_upper_triangle(std::size_t n, const std::vector<Int>& upper,
                                               std::optional<std::vector<std::size_t>> parts = std::nullopt);

  /// w(u, v) is queried for u < v only.
  template <class F>
  static EdgeWeightedGraph generate(std::size_t n, F&& w) {
    std::vector<Int> m(n * n, Int{0});
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) m[u * n + v] = m[v * n + u] = Int(w(u, v));
    return EdgeWeightedGraph(n, std::move(m));
  }

  /// Part-major block layout: vertex p·part_size + x is vertex x of part p.
  template <class F>
  static EdgeWeightedGraph generate_partite(std::size_t part_count, std::size_t part_size, F&& w) {
    const std::size_t n = part_count * part_size;
    std::vector<Int> m(n * n, Int{0});
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) m[u * n + v] = m[v * n + u] = Int(w(u, v));
    return EdgeWeightedGraph(n, std::move(m), block_parts(part_count, part_size));
  }

  static std::vector<std::size_t> block_parts(std::size_t part_count, std::size_t part_size);

  std::size_t size() const { return n_; }
  Int weight(std::size_t u, std::size_t v) const { return w_[u * n_ + v]; }

  bool is_partite() const { return parts_.has_value(); }
  std::size_t part_count() const { return part_count_; }
  std::size_t part_size() const { return is_partite() ? n_ / part_count_ : n_; }
  std::size_t part_of(std::size_t v) const { return is_partite() ? (*parts_)[v] : 0; }
  const std::optional<std::vector<std::size_t>>& parts() const { return parts_; }
  /// Sorted vertices of part p.
  const std::vector<std::size_t>& members(std::size_t p) const { return members_.at(p); }
  /// The x-th (0-based) vertex of part p.
  std::size_t vertex(std::size_t p, std::size_t x) const { return members_.at(p).at(x); }

  EdgeWeightedGraph without_parts() const { return EdgeWeightedGraph(n_, w_); }

  /// Largest |w(u,v)| over u != v (0 for n < 2).
  Int max_abs_weight() const;
  Int min_weight() const;
  Int max_weight() const;

  /// Strict upper triangle in row-major order (the wire format).
  std::vector<Int> upper_triangle() const;

  friend bool operator==(const EdgeWeightedGraph&, const EdgeWeightedGraph&) = default;

 private:
  std::size_t n_;
  std::vector<Int> w_;
  std::optional<std::vector<std::size_t>> parts_;
  std::size_t part_count_ = 1;
  std::vector<std::vector<std::size_t>> members_;
};

/// Total weight of the clique on the given distinct vertices.
Int clique_weight(const EdgeWeightedGraph& g, const std::vector<std::size_t>& vertices);

}  // namespace mwr::graph
