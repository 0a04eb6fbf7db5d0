#include <gtest/gtest.h>

#include <random>

#include "mwr/geometry/geometry.hpp"

namespace mwr::geometry {
namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Every closed box between distinct coordinates, plus the empty box.
Int rectangle_oracle(const WeightedPointSet& p) {
  const std::size_t d = p.dim();
  std::vector<std::vector<std::int64_t>> axes(d);
  for (const auto& q : p.points())
    for (std::size_t t = 0; t < d; ++t) axes[t].push_back(q.coords[t]);
  for (auto& a : axes) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  Int best{0};
  DTuple ilo(d, 0), ihi(d);
  for (std::size_t t = 0; t < d; ++t) ihi[t] = static_cast<std::int64_t>(axes[t].size()) - 1;
  for_each_index(ilo, ihi, [&](const DTuple& a) {
    for_each_index(a, ihi, [&](const DTuple& b) {
      DTuple lo(d), hi(d);
      for (std::size_t t = 0; t < d; ++t) {
        lo[t] = axes[t][a[t]];
        hi[t] = axes[t][b[t]];
      }
      best = std::max(best, rectangle_weight(p, lo, hi));
    });
  });
  return best;
}

WeightedPointSet random_points(std::mt19937_64& rng, std::size_t d, std::size_t count) {
  std::vector<WeightedPoint> pts;
  for (std::size_t k = 0; k < count; ++k) {
    DTuple c(d);
    for (std::size_t t = 0; t < d; ++t) c[t] = uniform(rng, -5, 5);
    pts.push_back({c, uniform(rng, -10, 10)});
  }
  return WeightedPointSet(d, std::move(pts));
}

TEST(Rectangle, Examples) {
  auto one = max_weight_rectangle(WeightedPointSet(2, {{{2, 3}, 5}}));
  EXPECT_EQ(one.value, 5);
  EXPECT_FALSE(one.empty);
  EXPECT_EQ(one.lo, (DTuple{2, 3}));
  auto line = max_weight_rectangle(WeightedPointSet(2, {{{0, 0}, 1}, {{1, 0}, -2}, {{2, 0}, 3}}));
  EXPECT_EQ(line.value, 3);
  auto neg = max_weight_rectangle(WeightedPointSet(2, {{{0, 0}, -1}, {{1, 4}, -2}}));
  EXPECT_EQ(neg.value, 0);
  EXPECT_TRUE(neg.empty);
}

TEST(Rectangle, CoincidentPointsAdd) {
  auto s = max_weight_rectangle(WeightedPointSet(1, {{{4}, 3}, {{4}, -1}, {{5}, -5}}));
  EXPECT_EQ(s.value, 2);
}

TEST(Rectangle, MatchesOracleAndRecounts) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    auto p = random_points(rng, d, 1 + rng() % (d == 3 ? 8 : 14));
    auto s = max_weight_rectangle(p);
    ASSERT_EQ(s.value, rectangle_oracle(p));
    if (!s.empty) ASSERT_EQ(rectangle_weight(p, s.lo, s.hi), s.value);
  }
}

TEST(Rectangle, InvariantUnderMonotoneMaps) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_points(rng, 2, 12);
    std::vector<WeightedPoint> mapped;
    for (const auto& q : p.points()) mapped.push_back({{q.coords[0] * 7 - 3, q.coords[1] * q.coords[1] * q.coords[1]}, q.weight});
    ASSERT_EQ(max_weight_rectangle(p).value, max_weight_rectangle(WeightedPointSet(2, mapped)).value);
  }
}

TEST(Depth, Examples) {
  EXPECT_EQ(weighted_depth(WeightedBoxSet(2, {{{0, 0}, {1, 1}, 5}})).value, 5);
  EXPECT_EQ(weighted_depth(WeightedBoxSet(2, {{{0, 0}, {1, 1}, 3}, {{2, 2}, {3, 3}, 4}})).value, 4);
  WeightedBoxSet overlap(2, {{{0, 0}, {2, 2}, 3}, {{1, 1}, {3, 3}, -1}});
  auto s = weighted_depth(overlap);
  EXPECT_EQ(s.value, 3);
  EXPECT_EQ(depth_at(overlap, s.point), 3);
  EXPECT_LT(s.point[0], 1);
}

TEST(Depth, EmptyAndNegative) {
  EXPECT_EQ(weighted_depth(WeightedBoxSet(3)).value, 0);
  WeightedBoxSet neg(1, {{{0}, {4}, -2}});
  auto s = weighted_depth(neg);
  EXPECT_EQ(s.value, 0);
  EXPECT_EQ(depth_at(neg, s.point), 0);
}

TEST(Depth, MatchesPointProbes) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    std::vector<WeightedBox> boxes;
    for (std::size_t k = 0, count = 1 + rng() % 8; k < count; ++k) {
      DTuple lo(d), hi(d);
      for (std::size_t t = 0; t < d; ++t) {
        lo[t] = uniform(rng, -4, 3);
        hi[t] = uniform(rng, lo[t] + 1, 5);
      }
      boxes.push_back({lo, hi, uniform(rng, -9, 9)});
    }
    WeightedBoxSet set(d, boxes);
    Int probe{0};
    for_each_index(DTuple(d, -5), DTuple(d, 5), [&](const DTuple& p) { probe = std::max(probe, depth_at(set, p)); });
    auto s = weighted_depth(set);
    ASSERT_EQ(s.value, probe);
    ASSERT_EQ(depth_at(set, s.point), s.value);
  }
}

TEST(Depth, PairedNegationCancels) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<WeightedBox> boxes;
    for (int k = 0; k < 5; ++k) {
      DTuple lo{uniform(rng, 0, 3), uniform(rng, 0, 3)};
      DTuple hi{lo[0] + uniform(rng, 1, 3), lo[1] + uniform(rng, 1, 3)};
      const Int w = uniform(rng, -9, 9);
      boxes.push_back({lo, hi, w});
      boxes.push_back({lo, hi, -w});
    }
    ASSERT_EQ(weighted_depth(WeightedBoxSet(2, boxes)).value, 0);
  }
}

}  // namespace
}  // namespace mwr::geometry
