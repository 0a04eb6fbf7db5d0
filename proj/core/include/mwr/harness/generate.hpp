#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "mwr/core/dense_array.hpp"
#include "mwr/core/weighted_sets.hpp"
#include "mwr/graph/graph.hpp"

namespace mwr::harness {

/// `count` parts of `size` vertices each, block layout.
struct PartSpec {
  std::size_t count;
  std::size_t size;
};

/// Parses "3,2" (3 parts of 2).
PartSpec parse_parts(std::string_view text);

/// Weights uniform on [-wmax, wmax], drawn for the upper triangle in
/// row-major order. With `parts`, n must equal count·size.
graph::EdgeWeightedGraph gen_graph(std::size_t n, std::uint64_t seed, std::int64_t wmax,
                                   std::optional<PartSpec> parts = std::nullopt);

/// Dense array of side n, row-major draws.
DenseArray<Int> gen_array(std::size_t d, std::int64_t n, std::uint64_t seed, std::int64_t wmax);

/// `count` points with coordinates uniform on [0, span).
WeightedPointSet gen_points(std::size_t d, std::size_t count, std::uint64_t seed, std::int64_t wmax,
                            std::int64_t span);

/// `count` boxes with corners in [0, span] and lo < hi on every axis.
WeightedBoxSet gen_boxes(std::size_t d, std::size_t count, std::uint64_t seed, std::int64_t wmax, std::int64_t span);

}  // namespace mwr::harness
