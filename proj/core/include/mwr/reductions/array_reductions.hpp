#pragma once

#include <algorithm>
#include <vector>

#include "mwr/array/intermediate.hpp"
#include "mwr/array/subarray.hpp"
#include "mwr/graph/solvers.hpp"
#include "mwr/reductions/certificate.hpp"

namespace mwr::reductions {

namespace detail {

template <class T>
BigInt max_abs_entry(std::span<const T> xs) {
  BigInt best = 0;
  for (const auto& x : xs) best = std::max(best, to_big(abs_value(x)));
  return best;
}

inline BigInt pow2(std::size_t e) { return BigInt(1) << e; }

}  // namespace detail

/// 2d-part subgraph instance to Central Maximum Subarray Sum (halfwidth n).
/// Cells with a zero coordinate hold -M'; cell i otherwise holds the weight
/// of the d-clique picking vertex (-i_r) of V_r when i_r < 0 and vertex i_r
/// of V'_r when i_r > 0 (1-based). Certificate: a = 2^{d-2}, b = 0.
template <class T = Int>
Reduction<CentralArray<T>> subgraph_to_central_sum(const graph::EdgeWeightedGraph& g, std::size_t d,
                                                   Mode mode = Mode::kTight) {
  require(d >= 2, "central sum reduction needs d >= 2");
  require(g.is_partite() && g.part_count() == 2 * d, "source must have 2d parts");
  const auto n = static_cast<std::int64_t>(g.part_size());

  std::vector<std::size_t> pick(d);
  Int cell_max{0};
  auto clique_at = [&](const DTuple& i) -> std::optional<Int> {
    for (std::size_t r = 0; r < d; ++r) {
      if (i[r] == 0) return std::nullopt;
      pick[r] = i[r] < 0 ? g.vertex(r, static_cast<std::size_t>(-i[r] - 1))
                         : g.vertex(d + r, static_cast<std::size_t>(i[r] - 1));
    }
    return graph::clique_weight(g, pick);
  };
  for_each_index(DTuple(d, -n), DTuple(d, n), [&](const DTuple& i) {
    if (auto w = clique_at(i)) cell_max = std::max(cell_max, abs(*w));
  });

  const BigInt m1 = mode == Mode::kTight ? detail::pow2(d + 1) * to_big(cell_max) + 1
                                         : power<BigInt>(100, static_cast<unsigned>(10 * d)) * to_big(g.max_abs_weight());
  const T penalty = narrow<T>(-m1);
  auto a = CentralArray<T>::generate(d, n, [&](const DTuple& i) -> T {
    auto w = clique_at(i);
    return w ? from_int<T>(*w) : penalty;
  });

  ReductionCertificate cert;
  cert.reduction_id = "subgraph_to_central_sum";
  cert.scale = detail::pow2(d - 2);
  cert.params = {{"M'", m1}, {"n", n}, {"d", d}};
  std::vector<std::int64_t> members;
  for (std::size_t p = 0; p < 2 * d; ++p)
    for (auto v : g.members(p)) members.push_back(static_cast<std::int64_t>(v));
  cert.backmap["members"] = std::move(members);
  return {std::move(a), std::move(cert)};
}

/// Subgraph choice of a CMRS witness: u_r is vertex i_r of V_r, u'_r vertex
/// δ_r - i_r of V'_r (1-based).
template <class T>
graph::SubgraphSolution subgraph_from_central_sum(const ReductionCertificate& cert,
                                                  const array::CombinationSolution<T>& s) {
  const auto d = static_cast<std::size_t>(cert.param("d"));
  const auto n = static_cast<std::int64_t>(cert.param("n"));
  const auto& members = cert.backmap.at("members");
  graph::SubgraphSolution out;
  for (std::size_t r = 0; r < d; ++r) {
    const std::int64_t u = s.anchor[r], v = s.offset[r] - s.anchor[r];
    if (u < 1 || u > n || v < 1 || v > n) throw DecodeError("witness touches a penalty cell");
    out.unprimed.push_back(static_cast<std::size_t>(members.at(static_cast<std::size_t>(r * n + u - 1))));
    out.primed.push_back(static_cast<std::size_t>(members.at(static_cast<std::size_t>((d + r) * n + v - 1))));
  }
  return out;
}

/// A'[i] = (-1)^{#non-negative coordinates of i} · A[i].
template <class T>
CentralArray<T> sign_flip_by_orthant(const CentralArray<T>& a) {
  return CentralArray<T>::generate(a.dim(), a.halfwidth(), [&](const DTuple& i) -> T {
    return count_nonnegative(i) % 2 == 1 ? T(-a[i]) : a[i];
  });
}

/// Smallest bonus this library treats as sufficient: 2^{d+1}·max|A| + 1.
template <class T>
BigInt orthant_bonus_bound(const CentralArray<T>& a) {
  return detail::pow2(a.dim() + 1) * detail::max_abs_entry(a.data()) + 1;
}

/// Published bonus for the subarray chain: 100^{10d}·max|A|.
template <class T>
BigInt paper_subarray_bonus(const CentralArray<T>& a) {
  return power<BigInt>(100, static_cast<unsigned>(10 * a.dim())) * detail::max_abs_entry(a.data());
}

/// Published bonus for the square chain: 100·2^d·max|A|.
template <class T>
BigInt paper_square_bonus(const CentralArray<T>& a) {
  return 100 * detail::pow2(a.dim()) * detail::max_abs_entry(a.data());
}

/// Adds `bonus` to every cell whose coordinates are all negative.
/// Certificate: a = 1, b = bonus. With `strict`, a bonus below
/// orthant_bonus_bound is rejected.
template <class T>
Reduction<CentralArray<T>> add_orthant_bonus(const CentralArray<T>& a, const BigInt& bonus, bool strict = true) {
  if (strict && bonus < orthant_bonus_bound(a))
    throw DomainError("orthant bonus " + bonus.str() + " is below the sufficient bound " + orthant_bonus_bound(a).str());
  const T add = narrow<T>(bonus);
  auto out = CentralArray<T>::generate(a.dim(), a.halfwidth(), [&](const DTuple& i) -> T {
    for (auto x : i)
      if (x >= 0) return a[i];
    return T(a[i] + add);
  });
  ReductionCertificate cert;
  cert.reduction_id = "add_orthant_bonus";
  cert.offset = bonus;
  cert.params = {{"bonus", bonus}};
  return {std::move(out), std::move(cert)};
}

/// A'[i] = Σ_{j ∈ B_d} (-1)^{|j|} A[i + j], side s -> s - 1.
template <class T>
DenseArray<T> build_difference_array(const DenseArray<T>& a) {
  require(a.side() >= 2, "difference array needs side >= 2");
  const auto cube = boolean_cube(a.dim());
  return DenseArray<T>::generate(a.dim(), a.side() - 1, [&](const DTuple& i) -> T {
    T total{0};
    for (const auto& j : cube) {
      if (l1norm(j) % 2 == 1)
        total = total - a[i + j];
      else
        total = total + a[i + j];
    }
    return total;
  });
}

template <class T>
DenseArray<T> build_difference_array(const CentralArray<T>& a) {
  return build_difference_array(a.to_dense());
}

/// MRC witness on a central array of halfwidth n selected by a subarray of
/// its difference array (base corner lo - (n+1), offset hi - lo + 1).
template <class T>
array::CombinationSolution<T> combination_from_subarray(const array::SubarraySolution<T>& s, std::int64_t n,
                                                        array::Combination kind) {
  const std::size_t d = s.lo.size();
  DTuple anchor = DTuple(d, n + 1) - s.lo;
  DTuple offset = s.hi - s.lo + DTuple::ones(d);
  if (kind == array::Combination::kMC) anchor = s.lo;
  return {kind, std::move(anchor), std::move(offset), s.value};
}

/// Clique to Central Max-Sum (halfwidth d·n). Certificate: a = d - 1,
/// b = -(2^d - (d+1))·c against the max (d+1)-clique.
template <class T = Int>
Reduction<CentralArray<T>> clique_to_central_max_sum(const graph::EdgeWeightedGraph& g, std::size_t d,
                                                     Mode mode = Mode::kTight) {
  require(d >= 2, "central max-sum reduction needs d >= 2");
  const auto n = static_cast<std::int64_t>(g.size());
  require(n >= 1, "graph needs vertices");
  const Int cp = g.max_abs_weight();
  const auto di = static_cast<std::int64_t>(d);
  const BigInt c = mode == Mode::kTight
                       ? BigInt((di * binomial2(di) + (di - 1) * binomial2(di + 1))) * to_big(cp) + 1
                       : BigInt(100) * power<BigInt>(n, 4) * to_big(cp);
  const T neg_c = narrow<T>(-c);

  std::vector<std::size_t> verts(d);
  auto dvalue = [&](const DTuple& i) -> T {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t t = 0; t < r; ++t)
        if (i[r] == i[t]) return neg_c;
      verts[r] = static_cast<std::size_t>(i[r] - 1);
    }
    return from_int<T>(graph::clique_weight(g, verts));
  };

  auto a = CentralArray<T>::filled(d, di * n, neg_c);
  for_each_index(DTuple::ones(d), DTuple(d, n), [&](const DTuple& i) {
    const T v = dvalue(i);
    a[-i] = v;
    const std::int64_t norm = l1norm(i);
    for (std::size_t t = 0; t < d; ++t) {
      DTuple cell = -i;
      cell[t] = norm;
      a[cell] = v;
    }
  });

  ReductionCertificate cert;
  cert.reduction_id = "clique_to_central_max_sum";
  cert.scale = di - 1;
  cert.offset = -(detail::pow2(d) - BigInt(di + 1)) * c;
  cert.params = {{"c", c}, {"c'", to_big(cp)}, {"n", n}, {"d", d}};
  return {std::move(a), std::move(cert)};
}

/// (d+1)-clique (sorted, 0-based) of a CMS witness: i_1..i_d and Δ - |i|_1.
template <class T>
std::vector<std::size_t> clique_from_central_max_sum(const ReductionCertificate& cert,
                                                     const array::CombinationSolution<T>& s) {
  const auto n = static_cast<std::int64_t>(cert.param("n"));
  std::vector<std::int64_t> v(s.anchor.begin(), s.anchor.end());
  v.push_back(s.scalar_offset() - l1norm(s.anchor));
  std::vector<std::size_t> out;
  for (auto x : v) {
    if (x < 1 || x > n) throw DecodeError("witness selects no vertex");
    out.push_back(static_cast<std::size_t>(x - 1));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw DecodeError("witness repeats a vertex");
  return out;
}

}  // namespace mwr::reductions
