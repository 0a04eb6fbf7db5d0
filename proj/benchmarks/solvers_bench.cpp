#include <benchmark/benchmark.h>

#include "mwr/array/intermediate.hpp"
#include "mwr/array/subarray.hpp"
#include "mwr/geometry/geometry.hpp"
#include "mwr/graph/solvers.hpp"
#include "mwr/harness/generate.hpp"
#include "mwr/reductions/array_reductions.hpp"
#include "mwr/reductions/depth.hpp"
#include "mwr/reductions/rectangle.hpp"
#include "mwr/reductions/subarray2d.hpp"

using namespace mwr;

namespace {

void BM_Kadane(benchmark::State& state) {
  const auto a = harness::gen_array(1, state.range(0), 1, 100);
  for (auto _ : state) benchmark::DoNotOptimize(array::max_subarray(a).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Kadane)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Complexity(benchmark::oN);

void BM_Subarray2D(benchmark::State& state) {
  const auto a = harness::gen_array(2, state.range(0), 1, 100);
  for (auto _ : state) benchmark::DoNotOptimize(array::max_subarray(a).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Subarray2D)->RangeMultiplier(2)->Range(32, 256)->Complexity(benchmark::oNCubed);

void BM_Subarray3D(benchmark::State& state) {
  const auto a = harness::gen_array(3, state.range(0), 1, 100);
  for (auto _ : state) benchmark::DoNotOptimize(array::max_subarray(a).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Subarray3D)->RangeMultiplier(2)->Range(4, 32);

void BM_Square2D(benchmark::State& state) {
  const auto a = harness::gen_array(2, state.range(0), 1, 100);
  for (auto _ : state) benchmark::DoNotOptimize(array::max_square_subarray(a).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Square2D)->RangeMultiplier(2)->Range(16, 128)->Complexity(benchmark::oNCubed);

void BM_Clique(benchmark::State& state) {
  const auto g = harness::gen_graph(static_cast<std::size_t>(state.range(0)), 1, 10);
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(graph::max_weight_clique(g, k).value);
}
BENCHMARK(BM_Clique)->ArgsProduct({{8, 16, 32}, {3, 4}});

void BM_MaxWeightRectangle(benchmark::State& state) {
  const auto pts = harness::gen_points(2, static_cast<std::size_t>(state.range(0)), 1, 10, 1'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(geometry::max_weight_rectangle(pts).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxWeightRectangle)->RangeMultiplier(2)->Range(32, 256);

void BM_WeightedDepth(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(1));
  const auto boxes = harness::gen_boxes(d, static_cast<std::size_t>(state.range(0)), 1, 10, 1'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(geometry::weighted_depth(boxes).value);
}
BENCHMARK(BM_WeightedDepth)->ArgsProduct({{16, 32, 64}, {2, 3}});

void BM_RectangleReduction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t k = 2, d = 2;
  const auto g = harness::gen_graph(d * k * n, 1, 10, harness::PartSpec{d * k, n});
  for (auto _ : state) benchmark::DoNotOptimize(reductions::kpartite_clique_to_rectangle(g, k, d).target.size());
}
BENCHMARK(BM_RectangleReduction)->DenseRange(2, 8, 2);

void BM_TriangleToSubarray(benchmark::State& state) {
  const auto g = harness::gen_graph(static_cast<std::size_t>(state.range(0)), 1, 10);
  for (auto _ : state) {
    const auto b = reductions::triangle_to_4comb(g);
    benchmark::DoNotOptimize(reductions::fourcomb_to_subarray(b.target).target.size());
  }
}
BENCHMARK(BM_TriangleToSubarray)->RangeMultiplier(2)->Range(16, 128);

void BM_CentralMaxSum(benchmark::State& state) {
  const auto g = harness::gen_graph(static_cast<std::size_t>(state.range(0)), 1, 10);
  for (auto _ : state) benchmark::DoNotOptimize(reductions::clique_to_central_max_sum<Int>(g, 3).target.size());
}
BENCHMARK(BM_CentralMaxSum)->DenseRange(4, 8, 2);

void BM_DepthReduction(benchmark::State& state) {
  const auto g = harness::gen_graph(static_cast<std::size_t>(state.range(0)), 1, 10);
  for (auto _ : state) benchmark::DoNotOptimize(reductions::clique_to_weighted_depth(g, 3).target.size());
}
BENCHMARK(BM_DepthReduction)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
