#include "mwr/reductions/subarray2d.hpp"

#include <algorithm>

namespace mwr::reductions {

using graph::EdgeWeightedGraph;

Reduction<DenseArray<Int>> triangle_to_4comb(const EdgeWeightedGraph& g, Mode mode) {
  const auto n = static_cast<std::int64_t>(g.size());
  require(n >= 3, "triangle reduction needs at least 3 vertices");
  const Int w = g.max_abs_weight();
  const Int diag = mode == Mode::kTight ? -(Int{5} * w + 1) : Int{0};
  auto adj = [&](std::int64_t i, std::int64_t j) {  // 1-based
    return i == j ? diag : g.weight(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  };
  const Int m = std::max(w, abs(diag));
  const Int m1 = Int{10} * m, m2 = Int{100} * m;

  auto b = DenseArray<Int>::generate(2, 2 * n, [&](const DTuple& ix) -> Int {
    const std::int64_t r = ix[0], c = ix[1];
    if (r <= n && c <= n) return adj(r, c);
    if (r <= n) return -adj(c - n, r);
    if (c <= n) return -adj(c, r - n);
    return r == c ? m1 + m2 : m2;
  });

  ReductionCertificate cert;
  cert.reduction_id = "triangle_to_4comb";
  cert.offset = to_big(m1 + m2);
  cert.params = {{"M", to_big(m)}, {"M'", to_big(m1)}, {"M''", to_big(m2)}, {"n", n}, {"diagonal", to_big(diag)}};
  return {std::move(b), std::move(cert)};
}

std::vector<std::size_t> triangle_from_4comb(const ReductionCertificate& cert, const array::FourCombination<Int>& q) {
  const auto n = static_cast<std::int64_t>(cert.param("n"));
  if (!(q.i >= 1 && q.i <= n && q.j >= 1 && q.j <= n && q.i2 == q.j2 && q.i2 > n && q.i2 <= 2 * n))
    throw DecodeError("quadruple does not have the i, j <= n < i' = j' form");
  std::vector<std::size_t> t{static_cast<std::size_t>(q.i - 1), static_cast<std::size_t>(q.j - 1),
                             static_cast<std::size_t>(q.i2 - n - 1)};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) throw DecodeError("quadruple repeats a vertex");
  return t;
}

std::string_view to_string(Pad p) { return p == Pad::kSentinel ? "sentinel" : "zero"; }

Pad pad_from_string(std::string_view s) {
  if (s == "sentinel") return Pad::kSentinel;
  if (s == "zero") return Pad::kZero;
  throw DomainError("unknown padding mode: " + std::string(s));
}

DenseArray<Int> padded_matrix(const DenseArray<Int>& b, Pad pad) {
  require(b.dim() == 2, "4-combination input must be a matrix");
  const std::int64_t m = b.side();
  require(m >= 1, "matrix must be nonempty");
  Int mass{0};
  for (const auto& x : b.data()) mass += abs(x);
  const Int l = Int{4} * mass + 1;
  return DenseArray<Int>::generate(2, m + 1, [&](const DTuple& ix) -> Int {
    const std::int64_t r = ix[0], c = ix[1];
    if (r > 1 && c > 1) return b[DTuple{r - 1, c - 1}];
    if (pad == Pad::kZero) return Int{0};
    return r == 1 ? l * c : l * r;
  });
}

Reduction<DenseArray<Int>> fourcomb_to_subarray(const DenseArray<Int>& b, Pad pad) {
  const auto ap = padded_matrix(b, pad);
  const std::int64_t m = b.side();
  auto c = DenseArray<Int>::generate(2, m, [&](const DTuple& ix) -> Int {
    const std::int64_t i = ix[0], j = ix[1];
    return ap[DTuple{i, j}] + ap[DTuple{i + 1, j + 1}] - ap[DTuple{i, j + 1}] - ap[DTuple{i + 1, j}];
  });
  ReductionCertificate cert;
  cert.reduction_id = "fourcomb_to_subarray";
  cert.params = {{"m", m}, {"L", pad == Pad::kSentinel ? to_big(ap[DTuple{1, 1}]) : BigInt(0)}};
  return {std::move(c), std::move(cert)};
}

array::FourCombination<Int> fourcomb_from_subarray(const array::SubarraySolution<Int>& s, const DenseArray<Int>& b) {
  array::FourCombination<Int> q{s.lo[0] - 1, s.lo[1] - 1, s.hi[0], s.hi[1], Int{0}};
  if (q.i >= 1 && q.j >= 1)
    q.value = b[DTuple{q.i, q.j}] + b[DTuple{q.i2, q.j2}] - b[DTuple{q.i, q.j2}] - b[DTuple{q.i2, q.j}];
  return q;
}

}  // namespace mwr::reductions
