#include <gtest/gtest.h>

#include <set>

#include "mwr/harness/bench.hpp"
#include "mwr/harness/generate.hpp"
#include "mwr/harness/json_io.hpp"
#include "mwr/harness/rng.hpp"
#include "mwr/harness/verify.hpp"

using namespace mwr;
using namespace mwr::harness;

TEST(Rng, UniformStaysInRangeAndRepeats) {
  Rng a(42), b(42);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto x = a.uniform(-3, 3);
    EXPECT_EQ(x, b.uniform(-3, 3));
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 3);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_THROW(a.uniform(1, 0), DomainError);
}

TEST(Rng, TrialSeedsDiffer) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t t = 0; t < 1000; ++t) seeds.insert(trial_seed(1, t));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
}

TEST(Generate, GraphIsDeterministic) {
  EXPECT_EQ(gen_graph(9, 5, 10), gen_graph(9, 5, 10));
  EXPECT_NE(gen_graph(9, 5, 10), gen_graph(9, 6, 10));
}

TEST(Generate, ZeroWmaxGivesZeroWeights) {
  const auto g = gen_graph(7, 3, 0);
  for (const auto& w : g.upper_triangle()) EXPECT_EQ(w, 0);
}

TEST(Generate, WeightsWithinBound) {
  const auto g = gen_graph(12, 8, 4);
  for (const auto& w : g.upper_triangle()) EXPECT_LE(abs(w), 4);
}

TEST(Generate, PartShape) {
  const auto g = gen_graph(6, 1, 10, PartSpec{3, 2});
  EXPECT_EQ(g.size(), 6u);
  ASSERT_TRUE(g.is_partite());
  EXPECT_EQ(g.part_count(), 3u);
  EXPECT_EQ(g.part_size(), 2u);
  EXPECT_EQ(g.members(1), (std::vector<std::size_t>{2, 3}));
  EXPECT_THROW(gen_graph(5, 1, 10, PartSpec{3, 2}), DomainError);
}

TEST(Generate, PartSpecParsing) {
  const auto p = parse_parts("3,2");
  EXPECT_EQ(p.count, 3u);
  EXPECT_EQ(p.size, 2u);
  EXPECT_THROW(parse_parts("3"), UsageError);
  EXPECT_THROW(parse_parts("3,x"), UsageError);
  EXPECT_THROW(parse_parts("0,2"), UsageError);
}

TEST(Generate, BoxesAreNondegenerate) {
  const auto boxes = gen_boxes(3, 50, 2, 5, 4);
  for (const auto& b : boxes.boxes())
    for (std::size_t t = 0; t < 3; ++t) {
      EXPECT_LT(b.lo[t], b.hi[t]);
      EXPECT_LE(b.hi[t], 4);
    }
}

TEST(JsonIo, BigIntegersBecomeStrings) {
  EXPECT_TRUE(big_to_json(BigInt(12)).is_number_integer());
  const BigInt huge = power<BigInt>(100, 20);
  const Json j = big_to_json(huge);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(big_from_json(j), huge);
  EXPECT_EQ(big_from_json(Json("-17")), BigInt(-17));
  EXPECT_THROW(big_from_json(Json("12a")), DomainError);
  EXPECT_THROW(big_from_json(Json(1.5)), DomainError);
}

TEST(JsonIo, GraphRoundTrip) {
  const auto g = gen_graph(6, 4, 9, PartSpec{2, 3});
  const Json j = to_json(g);
  EXPECT_EQ(j.at("weights").size(), 15u);
  EXPECT_EQ(graph_from_json(j), g);
  EXPECT_EQ(graph_from_json(Json::parse(R"({"n":3,"weights":[1,2,3]})")).weight(1, 2), 3);
}

TEST(JsonIo, ArrayRoundTrip) {
  const auto a = gen_array(2, 4, 1, 50);
  EXPECT_EQ(dense_from_json<Int>(to_json(a)), a);
  const auto c = CentralArray<BigInt>::generate(2, 1, [](const DTuple& i) { return power<BigInt>(10, 30) * (i[0] + 2 * i[1]); });
  const Json j = to_json(c);
  EXPECT_EQ(j.at("halfwidth"), 1);
  EXPECT_FALSE(fits_int64(j));
  EXPECT_EQ(central_from_json<BigInt>(j), c);
  EXPECT_THROW(dense_from_json<Int>(j), ArithmeticOverflow);
}

TEST(JsonIo, PointsBoxesAndCertificate) {
  const auto p = gen_points(3, 10, 2, 5, 7);
  EXPECT_EQ(points_from_json(to_json(p)), p);
  const auto b = gen_boxes(2, 10, 2, 5, 7);
  EXPECT_EQ(boxes_from_json(to_json(b)), b);

  reductions::ReductionCertificate cert;
  cert.reduction_id = "x";
  cert.scale = 4;
  cert.offset = -power<BigInt>(100, 20);
  cert.params["M"] = 7;
  cert.backmap["members"] = {3, 1, 2};
  const auto back = certificate_from_json(to_json(cert));
  EXPECT_EQ(back.reduction_id, "x");
  EXPECT_EQ(back.scale, 4);
  EXPECT_EQ(back.offset, cert.offset);
  EXPECT_EQ(back.param("M"), 7);
  EXPECT_EQ(back.backmap.at("members"), cert.backmap.at("members"));
}

TEST(JsonIo, SubarrayWitnessIsZeroBased) {
  array::SubarraySolution<Int> s{DTuple{1, 2}, DTuple{3, 3}, Int{5}};
  const Json j = solution_json(s);
  EXPECT_EQ(j.at("witness").at("lo"), Json::parse("[0,1]"));
  EXPECT_EQ(j.at("witness").at("hi"), Json::parse("[2,2]"));
}

TEST(JsonIo, DigestIsStable) {
  EXPECT_EQ(digest(to_json(gen_graph(8, 1, 5))), digest(to_json(gen_graph(8, 1, 5))));
  EXPECT_NE(digest(to_json(gen_graph(8, 1, 5))), digest(to_json(gen_graph(8, 2, 5))));
  EXPECT_EQ(digest(Json("")).size(), 16u);
}

TEST(Verify, Subarray2dFixedSize) {
  ChainParams p;
  p.n_min = p.n_max = 20;
  const auto r = verify_chain(Chain::kSubarray2d, p, 50, 1);
  EXPECT_EQ(r.passes, 50u);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.steps.at("end_to_end").held, 50u);
}

TEST(Verify, ZeroTrials) {
  const auto r = verify_chain(Chain::kDepth, {}, 0, 1);
  EXPECT_EQ(r.trials, 0u);
  EXPECT_EQ(r.passes, 0u);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.steps.empty());
}

TEST(Verify, EveryChainPassesSmallRuns) {
  for (auto c : {Chain::kRectangle, Chain::kSubarray2d, Chain::kSubarrayHd, Chain::kSquare, Chain::kDepth}) {
    const auto r = verify_chain(c, {}, 4, 11);
    EXPECT_EQ(r.passes + r.failures.size(), r.trials);
    EXPECT_TRUE(r.ok()) << to_string(c) << ": " << to_json(r).dump();
  }
}

TEST(Verify, InjectedFaultIsCaughtAndReplays) {
  for (auto c : {Chain::kRectangle, Chain::kSubarray2d, Chain::kSubarrayHd, Chain::kSquare, Chain::kDepth}) {
    ChainParams p;
    p.inject_fault = true;
    const auto r = verify_chain(c, p, 3, 5);
    ASSERT_EQ(r.failures.size(), 1u) << to_string(c);
    const auto& f = r.failures[0];
    EXPECT_EQ(f.trial, 0u);
    EXPECT_NE(f.expected, f.actual);

    p.replay = f.seed;
    const auto again = verify_chain(c, p, 1, 999);
    ASSERT_EQ(again.failures.size(), 1u);
    EXPECT_EQ(again.failures[0].digest, f.digest);
    EXPECT_EQ(again.failures[0].expected, f.expected);
    EXPECT_EQ(again.failures[0].actual, f.actual);
  }
}

TEST(Verify, ReportIsDeterministicApartFromTiming) {
  auto strip = [](Json j) {
    j.erase("timing");
    for (auto& t : j["trial_results"]) t.erase("ms");
    return j.dump();
  };
  const auto a = verify_chain(Chain::kSquare, {}, 5, 3);
  const auto b = verify_chain(Chain::kSquare, {}, 5, 3);
  EXPECT_EQ(strip(to_json(a, true)), strip(to_json(b, true)));
}

TEST(Verify, SquareReportOnlyAtD2) {
  ChainParams p;
  p.d = {2};
  p.n_min = 3;
  const auto r = verify_chain(Chain::kSquare, p, 5, 2);
  EXPECT_FALSE(r.steps.at("end_to_end").asserted);
}

TEST(Verify, OutOfRangeParameters) {
  ChainParams p;
  p.d = {3};
  EXPECT_THROW(verify_chain(Chain::kRectangle, p, 1, 1), UsageError);
  EXPECT_THROW(verify_chain(Chain::kSubarray2d, p, 1, 1), UsageError);
  p.d = {5};
  EXPECT_THROW(verify_chain(Chain::kDepth, p, 1, 1), UsageError);

  ChainParams q;
  q.n_min = 4;
  q.n_max = 6;
  q.d = {3};
  EXPECT_THROW(verify_chain(Chain::kSubarrayHd, q, 1, 1), UsageError);
  q.d = {2};
  EXPECT_NO_THROW(verify_chain(Chain::kSubarrayHd, q, 0, 1));

  ChainParams big;
  big.n_max = 41;
  EXPECT_THROW(verify_chain(Chain::kSubarray2d, big, 1, 1), UsageError);
  ChainParams k;
  k.k = {4};
  EXPECT_THROW(verify_chain(Chain::kRectangle, k, 1, 1), UsageError);
  ChainParams w;
  w.wmax = -1;
  EXPECT_THROW(verify_chain(Chain::kDepth, w, 1, 1), UsageError);
  EXPECT_THROW(chain_from_string("nope"), UsageError);
}

TEST(Bench, SlopeFitRecoversExponent) {
  const std::vector<double> n{10, 20, 40, 80};
  std::vector<double> t;
  for (double x : n) t.push_back(3e-9 * x * x);
  const auto fit = fit_loglog(n, t);
  EXPECT_NEAR(fit.slope, 2.0, 1e-9);
  EXPECT_LE(fit.ci_low, 2.0 + 1e-9);
  EXPECT_GE(fit.ci_high, 2.0 - 1e-9);
}

TEST(Bench, NeedsThreeSizes) {
  EXPECT_THROW(bench("kadane", {100, 200}, 1), UsageError);
  EXPECT_THROW(bench("nope", {1, 2, 3}, 1), UsageError);
  EXPECT_THROW(fit_loglog({1, 2}, {1, 2}), UsageError);
}

TEST(Bench, ReportShape) {
  const auto r = bench("kadane", {1000, 2000, 4000}, 1, 0.001);
  EXPECT_EQ(r.median_seconds.size(), 3u);
  const Json j = to_json(r);
  EXPECT_TRUE(j.contains("slope"));
  EXPECT_EQ(j.at("slope_ci95").size(), 2u);
}
