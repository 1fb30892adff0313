#include "edtk/oracle.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace edtk {
namespace {

std::vector<std::int64_t> values(const ScalarGrid& g) {
  return {g.cells().begin(), g.cells().end()};
}

TEST(BruteSdt, Examples) {
  const BinaryGrid row(Extents{5}, std::vector<std::uint8_t>{0, 1, 1, 1, 0});
  EXPECT_EQ(values(oracle::brute_sdt(row)), (std::vector<std::int64_t>{0, 1, 4, 1, 0}));
  const ScalarGrid zeros = oracle::brute_sdt(BinaryGrid(Extents{3, 3}, 0));
  for (auto v : zeros.cells()) EXPECT_EQ(v, 0);
  const Extents e{3, 3};
  const ScalarGrid inf = oracle::brute_sdt(BinaryGrid(e, 1));
  for (auto v : inf.cells()) EXPECT_EQ(v, e.max_sqdist() + 1);
}

TEST(BruteRedt, Examples) {
  BallSet one(1);
  one.add({2}, 5);
  EXPECT_EQ(values(oracle::brute_redt(one, Extents{5})),
            (std::vector<std::int64_t>{1, 4, 5, 4, 1}));
  const ScalarGrid empty = oracle::brute_redt(BallSet(1), Extents{5});
  for (auto v : empty.cells()) EXPECT_LE(v, 0);

  BallSet a(1), b(1), both(1);
  a.add({1}, 4);
  b.add({5}, 9);
  both.add({1}, 4);
  both.add({5}, 9);
  const auto fa = oracle::brute_redt(a, Extents{8});
  const auto fb = oracle::brute_redt(b, Extents{8});
  const auto fab = oracle::brute_redt(both, Extents{8});
  for (std::uint64_t i = 0; i < 8; ++i) EXPECT_EQ(fab[i], std::max(fa[i], fb[i]));
}

TEST(BruteUnion, OpenBalls) {
  BallSet b(2);
  b.add({2, 2}, 5);
  EXPECT_EQ(foreground_count(oracle::brute_union(b, Extents{5, 5})), 13u);
}

TEST(BruteDma, DigitalBallHasOneMaximalBall) {
  const BallSet dma = oracle::brute_dma(testing::digital_ball(13, 3, 25));
  ASSERT_EQ(dma.size(), 1u);
  EXPECT_EQ(dma.sq_radius(0), 26);
  EXPECT_EQ(Coord(dma.center(0).begin(), dma.center(0).end()), (Coord{6, 6, 6}));
}

TEST(BruteDma, BlockOfFour) {
  BinaryGrid g(Extents{4, 4}, 0);
  g.at({1, 1}) = g.at({2, 1}) = g.at({1, 2}) = g.at({2, 2}) = 1;
  EXPECT_EQ(oracle::brute_dma(g).size(), 4u);
}

TEST(BruteDma, RowKeepsTheCenterBall) {
  const BinaryGrid g(Extents{7}, std::vector<std::uint8_t>{0, 1, 1, 1, 1, 1, 0});
  const BallSet dma = oracle::brute_dma(g);
  ASSERT_EQ(dma.size(), 1u);
  EXPECT_EQ(dma.center(0)[0], 3);
  EXPECT_EQ(dma.sq_radius(0), 9);
}

TEST(BruteDma, NoBackgroundIsDomainError) {
  EXPECT_THROW(oracle::brute_dma(BinaryGrid(Extents{3}, 1)), DomainError);
}

TEST(BrutePowerLabel, BoundaryAndTies) {
  BallSet b(1);
  b.add({2}, 9);
  b.add({6}, 4);
  const auto l = oracle::brute_power_label(b, Extents{9});
  for (std::int64_t p = 0; p < 9; ++p) {
    EXPECT_EQ(l.label[p], p <= 4 ? 0u : 1u);
    EXPECT_EQ(l.tie[p], 0);
  }
  BallSet sym(1);
  sym.add({0}, 1);
  sym.add({4}, 1);
  const auto t = oracle::brute_power_label(sym, Extents{5});
  EXPECT_EQ(t.tie[2], 1);
  EXPECT_EQ(t.label[2], 0u);
  EXPECT_EQ(t.tie[1], 0);
}

TEST(BrutePowerLabel, SingleBallLabelsEverything) {
  BallSet b(2);
  b.add({1, 1}, 2);
  const auto l = oracle::brute_power_label(b, Extents{3, 3});
  for (auto v : l.label.cells()) EXPECT_EQ(v, 0u);
}

TEST(Oracle, GuardsLargeInputs) {
  EXPECT_THROW(oracle::brute_sdt(BinaryGrid(Extents{1001, 1000}, 0)), DomainError);
  EXPECT_THROW(oracle::brute_dma(BinaryGrid(Extents{317, 317}, 0)), DomainError);
  EXPECT_THROW(oracle::brute_redt(BallSet(2), Extents{1001, 1000}), DomainError);
}

}  // namespace
}  // namespace edtk
