#include "mwr/reductions/depth.hpp"

#include <algorithm>

namespace mwr::reductions {

using graph::EdgeWeightedGraph;

Int depth_shift(const EdgeWeightedGraph& g, std::size_t d) {
  const Int pairs = binomial2(static_cast<std::int64_t>(d));
  const Int s = (pairs - 1) * g.max_weight() - pairs * g.min_weight() + 1;
  return std::max(Int{0}, s);
}

Reduction<WeightedBoxSet> clique_to_weighted_depth(const EdgeWeightedGraph& g, std::size_t d) {
  require(d >= 2, "depth reduction needs d >= 2");
  const std::size_t n = g.size();
  require(n >= d, "graph has fewer than d vertices");
  const Int s = depth_shift(g, d);
  const auto ni = static_cast<std::int64_t>(n);

  std::vector<WeightedBox> boxes;
  boxes.reserve(d * (d - 1) * n * (n - 1));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          if (i == j) continue;
          DTuple lo(d, 0), hi(d, ni);
          lo[i] = static_cast<std::int64_t>(u);
          hi[i] = lo[i] + 1;
          lo[j] = static_cast<std::int64_t>(v);
          hi[j] = lo[j] + 1;
          boxes.push_back({std::move(lo), std::move(hi), g.weight(u, v) + s});
        }
    }

  ReductionCertificate cert;
  cert.reduction_id = "clique_to_weighted_depth";
  cert.scale = 2;
  cert.offset = 2 * to_big(s) * binomial2(static_cast<std::int64_t>(d));
  cert.params = {{"s", to_big(s)}, {"n", ni}, {"d", d}};
  return {WeightedBoxSet(d, std::move(boxes)).sorted(), std::move(cert)};
}

std::vector<std::size_t> clique_from_depth_point(const ReductionCertificate& cert, const DTuple& p) {
  const auto n = static_cast<std::int64_t>(cert.param("n"));
  std::vector<std::size_t> out;
  for (auto x : p) {
    if (x < 0 || x >= n) throw DecodeError("point lies outside [0,n)^d");
    out.push_back(static_cast<std::size_t>(x));  // integer representative: floor is itself
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw DecodeError("point repeats a vertex");
  return out;
}

}  // namespace mwr::reductions
