#include "mwr/reductions/graph_reductions.hpp"

#include <algorithm>

namespace mwr::reductions {

using graph::EdgeWeightedGraph;

std::string_view to_string(Mode m) { return m == Mode::kTight ? "tight" : "paper"; }

Mode mode_from_string(std::string_view s) {
  if (s == "tight") return Mode::kTight;
  if (s == "paper") return Mode::kPaper;
  throw DomainError("unknown big-M mode: " + std::string(s));
}

const BigInt& ReductionCertificate::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw DomainError(reduction_id + ": missing parameter " + name);
  return it->second;
}

Reduction<EdgeWeightedGraph> clique_to_kpartite(const EdgeWeightedGraph& g, std::size_t parts, SameVertex same) {
  require(parts >= 2, "need at least two parts");
  const std::size_t n = g.size();
  const Int penalty = same == SameVertex::kZero
                          ? Int{0}
                          : -(Int{2} * Int{binomial2(static_cast<std::int64_t>(parts))} * g.max_abs_weight() + 1);
  auto target = EdgeWeightedGraph::generate_partite(parts, n, [&](std::size_t a, std::size_t b) {
    const std::size_t u = a % n, v = b % n;
    return u == v ? penalty : g.weight(u, v);
  });
  ReductionCertificate cert;
  cert.reduction_id = "clique_to_kpartite";
  cert.params = {{"n", n}, {"parts", parts}, {"same_vertex_weight", to_big(penalty)}};
  return {std::move(target), std::move(cert)};
}

std::size_t original_vertex(const ReductionCertificate& cert, std::size_t copy) {
  return copy % static_cast<std::size_t>(cert.param("n"));
}

Reduction<EdgeWeightedGraph> clique_to_subgraph_instance(const EdgeWeightedGraph& g, std::size_t d, Mode mode) {
  require(d >= 2, "subgraph reduction needs d >= 2");
  const std::size_t h = d / 2;
  require(g.is_partite() && g.part_count() == d + h, "source must have d + floor(d/2) parts");
  const std::size_t n = g.part_size();
  const std::int64_t counted_edges = binomial2(static_cast<std::int64_t>(2 * d)) - static_cast<std::int64_t>(d);
  const Int w = g.max_abs_weight();
  const Int m = mode == Mode::kTight ? Int{2} * Int{counted_edges} * w + 1
                                     : Int{100} * power<Int>(static_cast<std::int64_t>(d), 10) * w;

  // Output part p (0-based) and index x -> where its weights come from.
  // kind 0: source vertex; 1: copy of source part d+i-1 (part d+h+i-1); 2: zero part.
  auto source_of = [&](std::size_t p, std::size_t x) -> std::pair<int, std::size_t> {
    if (p < d + h) return {0, g.vertex(p, x)};
    if (p < d + 2 * h) return {1, g.vertex(p - h, x)};
    return {2, 0};
  };

  auto target = EdgeWeightedGraph::generate_partite(2 * d, n, [&](std::size_t a, std::size_t b) -> Int {
    std::size_t pa = a / n, pb = b / n;
    std::size_t xa = a % n, xb = b % n;
    if (pa > pb) {
      std::swap(pa, pb);
      std::swap(xa, xb);
    }
    auto [ka, ua] = source_of(pa, xa);
    auto [kb, ub] = source_of(pb, xb);
    if (ka == 2 || kb == 2) return Int{0};
    if (ka == 0 && kb == 0) return g.weight(ua, ub);
    if (ka == 0 && kb == 1) {
      // V'_{i+h} mirrors the V_i -- V'_i edges and is tied to V'_i.
      const std::size_t i = pb - d - h;  // 0-based i
      if (pa == i) return g.weight(ua, ub);
      if (pa == d + i) return ua == ub ? Int{0} : -m;
      return Int{0};
    }
    return Int{0};
  });

  ReductionCertificate cert;
  cert.reduction_id = "clique_to_subgraph_instance";
  cert.params = {{"d", d}, {"n", n}, {"M", to_big(m)}, {"W", to_big(w)}};
  std::vector<std::int64_t> members;
  for (std::size_t p = 0; p < d + h; ++p)
    for (auto v : g.members(p)) members.push_back(static_cast<std::int64_t>(v));
  cert.backmap["source_members"] = std::move(members);
  return {std::move(target), std::move(cert)};
}

std::vector<std::size_t> clique_from_subgraph(const ReductionCertificate& cert, const graph::SubgraphSolution& s) {
  const auto d = static_cast<std::size_t>(cert.param("d"));
  const std::size_t h = d / 2;
  require(s.unprimed.size() == d && s.primed.size() == d, "subgraph choice has the wrong size");
  const auto& members = cert.backmap.at("source_members");
  // Target vertex t sits in part t / n at index t % n; source parts 0..d+h-1
  // keep their positions.
  std::vector<std::size_t> out;
  auto source = [&](std::size_t t) { return static_cast<std::size_t>(members.at(t)); };
  for (auto v : s.unprimed) out.push_back(source(v));
  for (std::size_t i = 0; i < h; ++i) out.push_back(source(s.primed[i]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mwr::reductions
