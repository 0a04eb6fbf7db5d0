#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "mwr/array/intermediate.hpp"
#include "mwr/array/subarray.hpp"
#include "mwr/core/central_array.hpp"
#include "mwr/core/dense_array.hpp"
#include "mwr/core/weighted_sets.hpp"
#include "mwr/geometry/geometry.hpp"
#include "mwr/graph/solvers.hpp"
#include "mwr/harness/bench.hpp"
#include "mwr/harness/verify.hpp"
#include "mwr/reductions/certificate.hpp"

namespace mwr::harness {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones strings.
Json big_to_json(const BigInt& x);
BigInt big_from_json(const Json& j);

template <class T>
Json value_to_json(const T& x) {
  return big_to_json(to_big(x));
}

template <class T>
T value_from_json(const Json& j) {
  return reductions::narrow<T>(big_from_json(j));
}

/// FNV-1a 64 of a compact dump, as 16 hex digits.
std::string digest(const Json& j);

Json to_json(const graph::EdgeWeightedGraph& g);
graph::EdgeWeightedGraph graph_from_json(const Json& j);

template <class T>
Json to_json(const DenseArray<T>& a) {
  Json data = Json::array();
  for (const auto& x : a.data()) data.push_back(value_to_json(x));
  return Json{{"d", a.dim()}, {"side", a.side()}, {"data", std::move(data)}};
}

template <class T>
Json to_json(const CentralArray<T>& a) {
  Json j = to_json(a.to_dense());
  j["halfwidth"] = a.halfwidth();
  return j;
}

template <class T>
DenseArray<T> dense_from_json(const Json& j) {
  require(j.is_object() && j.contains("d") && j.contains("side") && j.contains("data"),
          "array needs d, side and data");
  std::vector<T> data;
  for (const auto& x : j.at("data")) data.push_back(value_from_json<T>(x));
  return DenseArray<T>(j.at("d").get<std::size_t>(), j.at("side").get<std::int64_t>(), std::move(data));
}

template <class T>
CentralArray<T> central_from_json(const Json& j) {
  auto dense = dense_from_json<T>(j);
  if (j.contains("halfwidth"))
    require(2 * j.at("halfwidth").get<std::int64_t>() + 1 == dense.side(), "halfwidth does not match side");
  return CentralArray<T>::from_dense(std::move(dense));
}

/// True when every "data" entry fits in 64 bits.
bool fits_int64(const Json& array_json);

Json to_json(const WeightedPointSet& p);
WeightedPointSet points_from_json(const Json& j);

Json to_json(const WeightedBoxSet& b);
WeightedBoxSet boxes_from_json(const Json& j);

Json to_json(const reductions::ReductionCertificate& c);
reductions::ReductionCertificate certificate_from_json(const Json& j);

/// {"value", "witness"} documents.
Json solution_json(const graph::CliqueSolution& s);
Json solution_json(const graph::SubgraphSolution& s);
Json solution_json(const geometry::RectangleSolution& s);
Json solution_json(const geometry::DepthSolution& s);
Json solution_json(const array::FourCombination<Int>& s);

/// Subarray witnesses are reported 0-based.
template <class T>
Json solution_json(const array::SubarraySolution<T>& s) {
  return Json{{"value", value_to_json(s.value)},
              {"witness", {{"lo", (s.lo - DTuple::ones(s.lo.size())).values()},
                           {"hi", (s.hi - DTuple::ones(s.hi.size())).values()}}}};
}

/// Combination witnesses are the problem parameters i and δ (or Δ·1).
template <class T>
Json solution_json(const array::CombinationSolution<T>& s) {
  return Json{{"value", value_to_json(s.value)},
              {"witness", {{"kind", array::to_string(s.kind)}, {"i", s.anchor.values()}, {"delta", s.offset.values()}}}};
}

Json to_json(const ChainParams& p, Chain chain);
Json to_json(const VerificationReport& r, bool with_trials = false);
Json to_json(const BenchReport& r);

}  // namespace mwr::harness
