#include <gtest/gtest.h>

#include <random>

#include "mwr/core/central_array.hpp"
#include "mwr/core/checked_int.hpp"
#include "mwr/core/digits.hpp"
#include "mwr/core/prefix_sum.hpp"
#include "mwr/core/weighted_sets.hpp"

namespace mwr {
namespace {

TEST(DigitReverse, Examples) {
  EXPECT_EQ(digit_reverse(5, 3, 2), 7);
  EXPECT_EQ(digit_reverse(7, 3, 2), 5);
  EXPECT_EQ(digit_reverse(0, 4, 3), 0);
  EXPECT_EQ(digit_reverse(1, 2, 3), 4);  // 001 -> 100
}

TEST(DigitReverse, IsAnInvolution) {
  for (std::int64_t n = 2; n <= 6; ++n)
    for (unsigned k = 1; k <= 4; ++k) {
      const auto top = int_pow(n, k);
      for (std::int64_t z = 0; z < top; ++z) ASSERT_EQ(digit_reverse(digit_reverse(z, n, k), n, k), z);
    }
}

TEST(DigitReverse, RejectsOutOfRange) {
  EXPECT_THROW(digit_reverse(9, 3, 2), DomainError);
  EXPECT_THROW(digit_reverse(-1, 3, 2), DomainError);
  EXPECT_THROW(digit_reverse(0, 1, 2), DomainError);
}

TEST(Digits, MostSignificantFirst) {
  EXPECT_EQ(to_digits(5, 3, 2), (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(from_digits({1, 2}, 3), 5);
}

TEST(TupleType, Examples) {
  EXPECT_EQ(tuple_type({-1, -1}), (DTuple{0, 0}));
  EXPECT_EQ(tuple_type({1, -1}), (DTuple{1, 0}));
  EXPECT_EQ(tuple_type({0, 3}), (DTuple{1, 1}));
}

TEST(TupleType, NormCountsNonNegatives) {
  for_each_index(DTuple(3, -2), DTuple(3, 2), [](const DTuple& i) {
    EXPECT_EQ(static_cast<std::size_t>(l1norm(tuple_type(i))), count_nonnegative(i));
  });
}

TEST(BooleanCube, LexicographicOrder) {
  const auto cube = boolean_cube(2);
  ASSERT_EQ(cube.size(), 4u);
  EXPECT_EQ(cube[0], (DTuple{0, 0}));
  EXPECT_EQ(cube[1], (DTuple{0, 1}));
  EXPECT_EQ(cube[2], (DTuple{1, 0}));
  EXPECT_EQ(cube[3], (DTuple{1, 1}));
}

TEST(ForEachIndex, VisitsBoxInOrder) {
  std::vector<DTuple> seen;
  for_each_index({1, 1}, {2, 3}, [&](const DTuple& i) { seen.push_back(i); });
  ASSERT_EQ(seen.size(), 6u);
  EXPECT_EQ(seen.front(), (DTuple{1, 1}));
  EXPECT_EQ(seen[1], (DTuple{1, 2}));
  EXPECT_EQ(seen.back(), (DTuple{2, 3}));
  int count = 0;
  for_each_index({1}, {0}, [&](const DTuple&) { ++count; });
  EXPECT_EQ(count, 0);
}

TEST(CheckedInt, DetectsOverflow) {
  const Int big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(big + 1, ArithmeticOverflow);
  EXPECT_THROW(big * 2, ArithmeticOverflow);
  EXPECT_THROW(Int{std::numeric_limits<std::int64_t>::min()} - 1, ArithmeticOverflow);
  EXPECT_EQ((Int{6} * 7).get(), 42);
  EXPECT_THROW(to_checked(power<BigInt>(10, 30)), ArithmeticOverflow);
  EXPECT_EQ(to_string(power<BigInt>(100, 20)), "1" + std::string(40, '0'));
}

TEST(DenseArray, ValidatesShapeAndIndex) {
  EXPECT_THROW(DenseArray<Int>(2, 2, std::vector<Int>(3)), DomainError);
  auto a = DenseArray<Int>::filled(2, 3, 0);
  EXPECT_THROW(a[DTuple({0, 1})], DomainError);
  EXPECT_THROW(a[DTuple({1, 4})], DomainError);
  EXPECT_EQ(a.with_cell({2, 3}, 9)[DTuple({2, 3})], 9);
}

TEST(CentralArray, OffsetStorage) {
  auto c = CentralArray<Int>::generate(2, 2, [](const DTuple& i) { return Int{10 * i[0] + i[1]}; });
  EXPECT_EQ(c.side(), 5);
  EXPECT_EQ(c[DTuple({-2, -2})], -22);
  EXPECT_EQ(c[DTuple({1, -1})], 9);
  EXPECT_EQ(c.to_dense()[DTuple({1, 1})], -22);
  EXPECT_EQ(c.to_dense()[DTuple({3, 3})], 0);
  EXPECT_THROW(c[DTuple({3, 0})], DomainError);
}

TEST(PrefixSum, Examples) {
  DenseArray<Int> ones(2, 2, {1, 1, 1, 1});
  EXPECT_EQ(PrefixSumIndex<Int>(ones).box_sum({1, 1}, {2, 2}), 4);
  DenseArray<Int> a(2, 2, {1, -2, -3, 4});
  PrefixSumIndex<Int> ps(a);
  EXPECT_EQ(ps.box_sum({1, 1}, {2, 1}), -2);
  EXPECT_EQ(ps.box_sum({1, 1}, {1, 1}), 1);
  EXPECT_EQ(ps.box_sum({1, 1}, {2, 2}), 0);
  EXPECT_THROW(ps.box_sum({2, 1}, {1, 1}), DomainError);
  EXPECT_THROW(ps.box_sum({1, 1}, {3, 1}), DomainError);
}

TEST(PrefixSum, MatchesNaiveSummation) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    const std::int64_t side = 1 + static_cast<std::int64_t>(rng() % (d == 3 ? 6 : 10));
    auto a = DenseArray<Int>::generate(d, side, [&](const DTuple&) { return Int{static_cast<std::int64_t>(rng() % 41) - 20}; });
    DTuple lo(d), hi(d);
    for (std::size_t t = 0; t < d; ++t) {
      auto x = 1 + static_cast<std::int64_t>(rng() % side), y = 1 + static_cast<std::int64_t>(rng() % side);
      lo[t] = std::min(x, y);
      hi[t] = std::max(x, y);
    }
    Int naive{0};
    for_each_index(lo, hi, [&](const DTuple& k) { naive += a[k]; });
    ASSERT_EQ(PrefixSumIndex<Int>(a).box_sum(lo, hi), naive);
  }
}

TEST(PrefixSum, WorksWithBigIntegers) {
  auto a = DenseArray<BigInt>::filled(2, 3, power<BigInt>(10, 25));
  EXPECT_EQ(PrefixSumIndex<BigInt>(a).box_sum({1, 1}, {3, 3}), 9 * power<BigInt>(10, 25));
}

TEST(WeightedSets, Validation) {
  EXPECT_THROW(WeightedPointSet(2, {{DTuple{1, 2, 3}, 1}}), DomainError);
  EXPECT_THROW(WeightedBoxSet(2, {{DTuple{0, 0}, DTuple{1, 0}, 1}}), DomainError);
  WeightedBox b{{0, 0}, {2, 2}, 1};
  EXPECT_TRUE(b.contains({1, 1}));
  EXPECT_FALSE(b.contains({2, 1}));
}

}  // namespace
}  // namespace mwr
