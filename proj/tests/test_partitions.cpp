#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace specrep;

TEST(Partitions, EnumerationSmallCases) {
  ASSERT_EQ(partitions_of(0).size(), 1u);
  EXPECT_TRUE(partitions_of(0)[0].empty());
  const std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(partitions_of(4), four);
}

TEST(Partitions, CountsMatchPentagonalRecurrence) {
  EXPECT_EQ(partitions_of(10).size(), 42u);
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(static_cast<std::int64_t>(partitions_of(n).size()), oracle::partition_count(n)) << n;
}

TEST(Partitions, EnumerationIsStrictlyDecreasingAndValid) {
  const auto ps = partitions_of(9);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    EXPECT_EQ(ps[i].size(), 9);
    if (i) EXPECT_GT(ps[i - 1], ps[i]);
  }
}

TEST(Partitions, RejectsMalformedInput) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({3, 0}), std::invalid_argument);
  EXPECT_THROW(parse_partition("3,x"), std::invalid_argument);
  EXPECT_THROW(parse_partition("3,,1"), std::invalid_argument);
  EXPECT_THROW(parse_partition("1,3"), std::invalid_argument);
  EXPECT_EQ(parse_partition("1,3", true), (Partition{3, 1}));
}

TEST(Partitions, Conjugate) {
  EXPECT_EQ(conjugate(Partition{4}), (Partition{1, 1, 1, 1}));
  EXPECT_EQ(conjugate(Partition{2, 2}), (Partition{2, 2}));
  EXPECT_EQ(conjugate(Partition{4, 3, 2}), (Partition{3, 3, 2, 1}));
  for (int n = 0; n <= 10; ++n)
    for (const auto& l : partitions_of(n)) {
      EXPECT_EQ(conjugate(l), oracle::conjugate_by_columns(l));
      EXPECT_EQ(conjugate(conjugate(l)), l);
    }
}

TEST(Partitions, Corners) {
  using C = std::vector<std::pair<int, int>>;
  EXPECT_EQ(corners(Partition{4}), (C{{1, 4}}));
  EXPECT_EQ(corners(Partition{4, 3, 2}), (C{{1, 4}, {2, 3}, {3, 2}}));
  EXPECT_EQ(corners(Partition{3, 3, 1}), (C{{2, 3}, {3, 1}}));
  EXPECT_THROW(corners(Partition{}), std::invalid_argument);
  // Removing any corner leaves a partition; removing any other cell does not.
  for (const auto& l : partitions_of(8))
    for (const auto& [r, c] : corners(l)) EXPECT_EQ(remove_cell(l, r).size(), 7);
}

TEST(Partitions, Containment) {
  EXPECT_TRUE(contains(Partition{2, 1}, Partition{4, 3, 2}));
  EXPECT_FALSE(contains(Partition{3}, Partition{2, 2}));
  for (const auto& l : partitions_of(6)) EXPECT_TRUE(contains(Partition{}, l));
}

TEST(Partitions, DiagonalHooks) {
  EXPECT_EQ(diagonal_hooks(Partition{2, 2}), (std::vector<int>{3, 1}));
  EXPECT_EQ(diagonal_hooks(Partition{3, 1, 1}), (std::vector<int>{5}));
  EXPECT_EQ(diagonal_hooks(Partition{1}), (std::vector<int>{1}));
  // Self-conjugate shapes have distinct odd hooks summing to n.
  for (int n = 1; n <= 14; ++n)
    for (const auto& l : partitions_of(n)) {
      if (!is_self_conjugate(l)) continue;
      const auto h = diagonal_hooks(l);
      EXPECT_EQ(std::accumulate(h.begin(), h.end(), 0), n);
      for (std::size_t i = 0; i < h.size(); ++i) {
        EXPECT_EQ(h[i] % 2, 1);
        if (i) EXPECT_GT(h[i - 1], h[i]);
      }
    }
}

TEST(Partitions, HookLengthDimensionsSquareSumToFactorial) {
  std::int64_t fact = 1;
  for (int n = 1; n <= 12; ++n) {
    fact *= n;
    std::int64_t sum = 0;
    for (const auto& l : partitions_of(n)) sum += dimension(l) * dimension(l);
    EXPECT_EQ(sum, fact) << n;
  }
  EXPECT_EQ(dimension(Partition{3, 2}), 5);
}

TEST(CycleTypes, PowerCycleType) {
  EXPECT_EQ(power_cycle_type(CycleType{6}, 2), (CycleType{3, 3}));
  EXPECT_EQ(power_cycle_type(CycleType{5, 3}, 3), (CycleType{5, 1, 1, 1}));
  EXPECT_EQ(power_cycle_type(CycleType{4, 2}, 2), (CycleType{2, 2, 1, 1}));
  EXPECT_EQ(power_cycle_type(CycleType{4, 2}, 0), (CycleType{1, 1, 1, 1, 1, 1}));
}

TEST(CycleTypes, PowerMatchesMaterializedPermutation) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& mu : cycle_types_of(n)) {
      std::vector<std::vector<int>> cycles;
      int next = 1;
      for (int part : mu.parts()) {
        cycles.emplace_back();
        for (int k = 0; k < part; ++k) cycles.back().push_back(next++);
      }
      const Permutation p = Permutation::from_cycles(n, cycles);
      for (int i = 0; i <= mu.order(); ++i) EXPECT_EQ(p.power(i).cycle_type(), power_cycle_type(mu, i));
    }
}

TEST(CycleTypes, OrderSignAndClassSizes) {
  EXPECT_EQ((CycleType{5, 3, 2}).order(), 30);
  EXPECT_EQ((CycleType{2, 1}).sign(), -1);
  EXPECT_TRUE((CycleType{5, 3}).splits_in_alternating());
  EXPECT_FALSE((CycleType{3, 3}).splits_in_alternating());
  EXPECT_TRUE((CycleType{5, 1}).splits_in_alternating());
  EXPECT_FALSE((CycleType{5, 1, 1}).splits_in_alternating());
  std::int64_t fact = 1;
  for (int n = 1; n <= 10; ++n) {
    fact *= n;
    std::int64_t total = 0;
    for (const auto& mu : cycle_types_of(n)) total += mu.class_size();
    EXPECT_EQ(total, fact);
  }
}

TEST(SkewShapes, CellsInRowMajorOrder) {
  const SkewShape s(Partition{3, 3}, Partition{1});
  using C = std::vector<std::pair<int, int>>;
  EXPECT_EQ(s.cells(), (C{{1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}}));
  EXPECT_THROW(SkewShape(Partition{2}, Partition{3}), std::invalid_argument);
}
