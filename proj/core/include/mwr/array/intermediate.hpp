#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwr/core/central_array.hpp"
#include "mwr/core/dense_array.hpp"

namespace mwr::array {

/// The six corner-combination problems sitting between the graph problems
/// and Maximum (Square) Subarray.
///
///   CMRS  max Σ_j            A[-i + δ×j]   i ∈ [n]^d, δ ∈ [2n]^d, δ - i >= 0
///   CMRC  max Σ_j (-1)^|j|·A[-i + δ×j]   same domain
///   MRC   max Σ_j (-1)^|j|·A[-i + δ×j]   i ∈ [n]^d, δ ∈ [2n]^d
///   CMS   max Σ_j            A[-i + Δ·j]   i ∈ [n]^d, Δ ∈ [2n], Δ - i_t >= 0
///   CMC   max Σ_j (-1)^|j|·A[-i + Δ·j]   same domain
///   MC    max Σ_j (-1)^|j|·A[ i + Δ·j]   i ∈ [n]^d, Δ ∈ [n]   (dense array)
///
/// j ranges over the Boolean cube B_d. The first five read a central array
/// of halfwidth n; MC reads a dense array of side n. Only combinations whose
/// 2^d corners all lie inside the array are admissible.
enum class Combination { kCMRS, kCMRC, kMRC, kCMS, kCMC, kMC };

std::string_view to_string(Combination kind);
Combination combination_from_string(std::string_view name);

inline bool is_signed(Combination k) { return k != Combination::kCMRS && k != Combination::kCMS; }
inline bool is_scalar_offset(Combination k) {
  return k == Combination::kCMS || k == Combination::kCMC || k == Combination::kMC;
}

/// anchor is i; offset is δ, or Δ·1 for the scalar-offset kinds.
template <class T = Int>
struct CombinationSolution {
  Combination kind;
  DTuple anchor;
  DTuple offset;
  T value;

  std::int64_t scalar_offset() const { return offset[0]; }
};

/// Corner accessed for cube vertex j.
inline DTuple combination_corner(Combination kind, const DTuple& anchor, const DTuple& offset, const DTuple& j) {
  const DTuple base = kind == Combination::kMC ? anchor : -anchor;
  return base + hadamard(offset, j);
}

namespace detail {

template <class T, class Lookup>
T combination_sum(Combination kind, const DTuple& anchor, const DTuple& offset, const std::vector<DTuple>& cube,
                  Lookup&& at) {
  const bool sign = is_signed(kind);
  T total{0};
  for (const auto& j : cube) {
    const T& v = at(combination_corner(kind, anchor, offset, j));
    if (sign && l1norm(j) % 2 == 1)
      total = total - v;
    else
      total = total + v;
  }
  return total;
}

}  // namespace detail

/// Direct evaluation of the defining maximum on a central array. Ties go to
/// the lexicographically smallest (anchor, offset). MC reads the array
/// renumbered to [2n+1]^d.
template <class T>
CombinationSolution<T> solve_intermediate(Combination kind, const CentralArray<T>& a);

/// MC on a dense array; every other kind needs a central array.
template <class T>
CombinationSolution<T> solve_intermediate(Combination kind, const DenseArray<T>& a) {
  require(kind == Combination::kMC, std::string(to_string(kind)) + " is defined on a central array");
  const std::size_t d = a.dim();
  const std::int64_t n = a.side();
  const auto cube = boolean_cube(d);
  auto at = [&](const DTuple& k) -> const T& { return a[k]; };
  std::optional<CombinationSolution<T>> best;
  // i + Δ·1 must stay inside [n]^d, so i <= n-1.
  for_each_index(DTuple::ones(d), DTuple(d, n - 1), [&](const DTuple& i) {
    std::int64_t top = 0;
    for (auto x : i) top = std::max(top, x);
    for (std::int64_t delta = 1; delta <= n - top; ++delta) {
      DTuple off(d, delta);
      T v = detail::combination_sum<T>(kind, i, off, cube, at);
      if (!best || v > best->value) best = CombinationSolution<T>{kind, i, std::move(off), std::move(v)};
    }
  });
  require(best.has_value(), "array too small: no admissible combination");
  return *best;
}

template <class T>
CombinationSolution<T> solve_intermediate(Combination kind, const CentralArray<T>& a) {
  if (kind == Combination::kMC) return solve_intermediate(kind, a.to_dense());
  const std::size_t d = a.dim();
  const std::int64_t n = a.halfwidth();
  const auto cube = boolean_cube(d);
  auto at = [&](const DTuple& k) -> const T& { return a[k]; };
  const bool central = kind != Combination::kMRC;
  std::optional<CombinationSolution<T>> best;

  auto consider = [&](const DTuple& i, DTuple off) {
    T v = detail::combination_sum<T>(kind, i, off, cube, at);
    if (!best || v > best->value) best = CombinationSolution<T>{kind, i, std::move(off), std::move(v)};
  };

  for_each_index(DTuple::ones(d), DTuple(d, n), [&](const DTuple& i) {
    if (is_scalar_offset(kind)) {
      // In-domain: Δ - i_t <= n on every axis; centrality: Δ >= i_t.
      std::int64_t lo = 1, hi = 2 * n;
      for (auto x : i) {
        lo = std::max(lo, x);
        hi = std::min(hi, x + n);
      }
      for (std::int64_t delta = lo; delta <= hi; ++delta) consider(i, DTuple(d, delta));
    } else {
      DTuple lo(d), hi(d);
      for (std::size_t t = 0; t < d; ++t) {
        lo[t] = central ? i[t] : 1;
        hi[t] = std::min<std::int64_t>(2 * n, i[t] + n);
      }
      for_each_index(lo, hi, [&](const DTuple& delta) { consider(i, delta); });
    }
  });
  require(best.has_value(), "array too small: no admissible combination");
  return *best;
}

/// Recomputes the objective of a witness on the given array.
template <class T>
T evaluate_combination(const CombinationSolution<T>& s, const DenseArray<T>& a) {
  return detail::combination_sum<T>(s.kind, s.anchor, s.offset, boolean_cube(a.dim()),
                                    [&](const DTuple& k) -> const T& { return a[k]; });
}

template <class T>
T evaluate_combination(const CombinationSolution<T>& s, const CentralArray<T>& a) {
  if (s.kind == Combination::kMC) return evaluate_combination(s, a.to_dense());
  return detail::combination_sum<T>(s.kind, s.anchor, s.offset, boolean_cube(a.dim()),
                                    [&](const DTuple& k) -> const T& { return a[k]; });
}

}  // namespace mwr::array
