#include "mwr/harness/generate.hpp"

#include <charconv>
#include <string>

#include "mwr/harness/rng.hpp"

namespace mwr::harness {
namespace {

std::size_t parse_count(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || v == 0)
    throw UsageError("bad part spec '" + std::string(whole) + "': expected COUNT,SIZE");
  return v;
}

}  // namespace

PartSpec parse_parts(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw UsageError("bad part spec '" + std::string(text) + "': expected COUNT,SIZE");
  return {parse_count(text.substr(0, comma), text), parse_count(text.substr(comma + 1), text)};
}

graph::EdgeWeightedGraph gen_graph(std::size_t n, std::uint64_t seed, std::int64_t wmax, std::optional<PartSpec> parts) {
  require(n >= 1, "graph needs at least one vertex");
  require(wmax >= 0, "wmax must be non-negative");
  if (parts) require(parts->count * parts->size == n, "vertex count must equal parts x part size");
  Rng rng(seed);
  std::vector<Int> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t k = 0; k < n * (n - 1) / 2; ++k) upper.emplace_back(rng.uniform(-wmax, wmax));
  std::optional<std::vector<std::size_t>> labels;
  if (parts) labels = graph::EdgeWeightedGraph::block_parts(parts->count, parts->size);
  return graph::EdgeWeightedGraph::from_upper_triangle(n, upper, std::move(labels));
}

DenseArray<Int> gen_array(std::size_t d, std::int64_t n, std::uint64_t seed, std::int64_t wmax) {
  require(wmax >= 0, "wmax must be non-negative");
  Rng rng(seed);
  return DenseArray<Int>::generate(d, n, [&](const DTuple&) { return Int(rng.uniform(-wmax, wmax)); });
}

WeightedPointSet gen_points(std::size_t d, std::size_t count, std::uint64_t seed, std::int64_t wmax, std::int64_t span) {
  require(wmax >= 0, "wmax must be non-negative");
  require(span >= 1, "coordinate span must be positive");
  Rng rng(seed);
  std::vector<WeightedPoint> pts;
  pts.reserve(count);
  for (std::size_t p = 0; p < count; ++p) {
    DTuple x(d);
    for (std::size_t t = 0; t < d; ++t) x[t] = rng.uniform(0, span - 1);
    pts.push_back({std::move(x), Int(rng.uniform(-wmax, wmax))});
  }
  return WeightedPointSet(d, std::move(pts));
}

WeightedBoxSet gen_boxes(std::size_t d, std::size_t count, std::uint64_t seed, std::int64_t wmax, std::int64_t span) {
  require(wmax >= 0, "wmax must be non-negative");
  require(span >= 1, "coordinate span must be positive");
  Rng rng(seed);
  std::vector<WeightedBox> boxes;
  boxes.reserve(count);
  for (std::size_t b = 0; b < count; ++b) {
    DTuple lo(d), hi(d);
    for (std::size_t t = 0; t < d; ++t) {
      lo[t] = rng.uniform(0, span - 1);
      hi[t] = rng.uniform(lo[t] + 1, span);
    }
    boxes.push_back({std::move(lo), std::move(hi), Int(rng.uniform(-wmax, wmax))});
  }
  return WeightedBoxSet(d, std::move(boxes));
}

}  // namespace mwr::harness
