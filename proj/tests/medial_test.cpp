#include "edtk/medial.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "edtk/oracle.hpp"
#include "edtk/redt.hpp"
#include "edtk/sdt.hpp"
#include "test_support.hpp"

namespace edtk {
namespace {

using testing::center_indices;

// Rows top to bottom, '#' foreground; x along the row is axis 0.
BinaryGrid picture(const std::vector<std::string>& rows) {
  const auto h = static_cast<std::int64_t>(rows.size());
  const auto w = static_cast<std::int64_t>(rows.front().size());
  BinaryGrid g(Extents{w, h}, 0);
  for (std::int64_t y = 0; y < h; ++y) {
    for (std::int64_t x = 0; x < w; ++x) g.at({x, y}) = rows[y][x] == '#' ? 1 : 0;
  }
  return g;
}

bool subset_of(const BallSet& a, const BallSet& b, const Extents& e) {
  const auto x = center_indices(a, e);
  const auto y = center_indices(b, e);
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

TEST(ChordHalfWidth, LargestRadiusStrictlyInside) {
  EXPECT_EQ(chord_half_width(1), 0);
  EXPECT_EQ(chord_half_width(2), 1);
  EXPECT_EQ(chord_half_width(4), 1);
  EXPECT_EQ(chord_half_width(5), 2);
  EXPECT_EQ(chord_half_width(9), 2);
  EXPECT_EQ(chord_half_width(10), 3);
  EXPECT_THROW(chord_half_width(0), ContractViolation);
  for (std::int64_t r = 1; r < 5000; ++r) {
    const std::int64_t h = chord_half_width(r);
    ASSERT_LT(h * h, r);
    ASSERT_LE(r, (h + 1) * (h + 1));
  }
}

TEST(Sk, RowHasOneBall) {
  const BinaryGrid g(Extents{7}, std::vector<std::uint8_t>{0, 1, 1, 1, 1, 1, 0});
  BallSet expected(1);
  expected.add({3}, 9);
  EXPECT_EQ(sk_extract(g), expected);
}

TEST(Sk, BlockOfFourUnitBalls) {
  const BinaryGrid g = picture({"....", ".##.", ".##.", "...."});
  const BallSet sk = sk_extract(g);
  ASSERT_EQ(sk.size(), 4u);
  for (std::size_t i = 0; i < sk.size(); ++i) EXPECT_EQ(sk.sq_radius(i), 1);
  EXPECT_EQ(rdma(g), sk);
}

TEST(Sk, EmptyForegroundAndNoBackground) {
  EXPECT_TRUE(sk_extract(BinaryGrid(Extents{3, 3}, 0)).empty());
  EXPECT_TRUE(rdma(BinaryGrid(Extents{3, 3}, 0)).empty());
  EXPECT_THROW(sk_extract(BinaryGrid(Extents{3, 3}, 1)), DomainError);
  EXPECT_THROW(rdma(BinaryGrid(Extents{3, 3}, 1)), DomainError);
}

TEST(Sk, CubeOfTwenty) {
  EXPECT_EQ(sk_extract(testing::bordered_cube(20, 3)).size(), 940u);
}

TEST(ReduceRow, NestedChordIsDropped) {
  std::vector<RowParabola> row(2);
  row[0] = {0, 3, 9, 1, 5, false};
  row[1] = {1, 4, 2, 3, 5, false};
  ReductionStats stats;
  const auto kept = reduce_row(row, &stats);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].ball, 0u);
  EXPECT_EQ(stats.emitted, 2u);
  EXPECT_EQ(stats.pushes, 1u);
}

TEST(ReduceRow, EqualLeftEndsSortLongestFirst) {
  std::vector<RowParabola> row(2);
  row[0] = {0, 2, 1, 2, 2, false};
  row[1] = {1, 4, 9, 2, 6, false};
  const auto kept = reduce_row(row);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].ball, 1u);
}

TEST(ReduceRow, IdenticalChordsCollapseToOneDoubledSurvivor) {
  std::vector<RowParabola> row(3);
  row[0] = {4, 3, 2, 2, 4, false};
  row[1] = {2, 3, 3, 2, 4, false};
  row[2] = {7, 8, 1, 8, 8, false};
  const auto kept = reduce_row(row);
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0].ball, 2u);
  EXPECT_TRUE(kept[0].doubled);
  EXPECT_EQ(kept[1].ball, 7u);
  EXPECT_FALSE(kept[1].doubled);
}

TEST(ReduceRow, PushesNeverExceedEmitted) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> pos(0, 30), half(0, 6);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<RowParabola> row(1 + trial % 20);
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::int64_t c = pos(rng), h = half(rng);
      row[i] = {i, c, h * h + 1, c - h, c + h, false};
    }
    ReductionStats stats;
    const auto kept = reduce_row(row, &stats);
    ASSERT_LE(stats.pushes, stats.emitted);
    // No kept chord contains the next one.
    for (std::size_t i = 1; i < kept.size(); ++i) {
      ASSERT_FALSE(kept[i - 1].left <= kept[i].left && kept[i].right <= kept[i - 1].right);
    }
  }
}

TEST(RdmaReduce, RowExample) {
  BallSet sk(1);
  sk.add({3}, 9);
  sk.add({4}, 2);
  BallSet expected(1);
  expected.add({3}, 9);
  EXPECT_EQ(rdma_reduce(sk, Extents{7}), expected);
}

TEST(RdmaReduce, SingleBallSurvives) {
  BallSet sk(2);
  sk.add({2, 3}, 5);
  EXPECT_EQ(rdma_reduce(sk, Extents{6, 6}), sk);
  EXPECT_EQ(rdma_reduce(sk, Extents{6, 6}, Reduction::centers), sk);
}

TEST(Rdma, DigitalBallHasOneMaximalBall) {
  const BinaryGrid g = testing::digital_ball(13, 3, 25);
  const BallSet r = rdma(g);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.sq_radius(0), 26);
  EXPECT_EQ(center_indices(r, g.extents()),
            (std::vector<std::uint64_t>{g.extents().linear_index(Coord{6, 6, 6})}));
}

TEST(Rdma, CentersModeKeepsMoreBalls) {
  const BinaryGrid g = testing::bordered_cube(20, 3);
  const BallSet sk = sk_extract(g);
  EXPECT_EQ(rdma_reduce(sk, g.extents(), Reduction::centers).size(), sk.size());
  EXPECT_LT(rdma_reduce(sk, g.extents()).size(), sk.size());
}

// A skeleton ball that is not maximal: (0,0;1) lies inside (1,0;2), which
// ties with it at (0,0) and never reaches the envelope on its own.
TEST(Rdma, RepairReplacesBallsContainedInAnotherSdtBall) {
  const BinaryGrid g = picture({"####", ".###", "#...", ".###"});
  const Extents& e = g.extents();
  const BallSet literal = rdma(g, Reduction::intersect, 1, false);
  const BallSet dma = oracle::brute_dma(g);
  EXPECT_FALSE(subset_of(literal, dma, e));
  const BallSet repaired = rdma(g);
  EXPECT_TRUE(subset_of(repaired, dma, e));
  EXPECT_EQ(reconstruct(repaired, e), g);

  BallSet lone(2);
  lone.add({0, 0}, 1);
  BallSet expected(2);
  expected.add({1, 0}, 2);
  EXPECT_EQ(promote_to_maximal(lone, g), expected);
}

TEST(PromoteToMaximal, MaximalBallsAreUnchanged) {
  const BinaryGrid g = testing::digital_ball(11, 2, 16);
  const BallSet dma = oracle::brute_dma(g);
  EXPECT_EQ(promote_to_maximal(dma, g), dma);
}

TEST(RestoreCoverage, AddsOwnersOfUncoveredCells) {
  const BinaryGrid g = picture({"##...", "##...", ".....", "...#."});
  const BallSet sk = sk_extract(g);
  ASSERT_GE(sk.size(), 2u);
  std::vector<bool> keep(sk.size(), true);
  keep.back() = false;
  const BallSet partial = sk.subset(keep);
  ASSERT_NE(reconstruct(partial, g.extents()), g);
  const BallSet restored = restore_coverage(partial, sk, g);
  EXPECT_EQ(reconstruct(restored, g.extents()), g);
  EXPECT_EQ(restore_coverage(sk, sk, g), sk);
}

TEST(Rdma, RandomImagesAreReversibleAndMaximal) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const Extents e = testing::random_extents(rng, d, 10);
    const BinaryGrid g = trial % 3 == 0 ? testing::random_image_with_background(rng, e, 0.8)
                                        : testing::random_blobs(rng, e, 3);
    const BallSet sk = sk_extract(g);
    const BallSet literal = rdma_reduce(sk, e);
    const BallSet r = rdma(g);
    ASSERT_EQ(reconstruct(sk, e), g) << "trial " << trial;
    ASSERT_EQ(reconstruct(r, e), g) << "trial " << trial;
    ASSERT_TRUE(subset_of(literal, sk, e));
    ASSERT_TRUE(subset_of(r, oracle::brute_dma(g), e)) << "trial " << trial;
    ASSERT_LE(r.size(), foreground_count(g));
    ASSERT_LE(literal.size(), sk.size());
  }
}

TEST(Rdma, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(34);
  const BinaryGrid g = testing::random_blobs(rng, Extents{24, 20, 12}, 8);
  EXPECT_EQ(sk_extract(g, 1), sk_extract(g, 4));
  EXPECT_EQ(rdma(g, Reduction::intersect, 1), rdma(g, Reduction::intersect, 4));
}

}  // namespace
}  // namespace edtk
