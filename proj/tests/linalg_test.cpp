#include <gtest/gtest.h>

#include <random>

#include "orbitcat/linalg.hpp"

using namespace orbitcat;

namespace
{

Vector vec(std::initializer_list<int> xs)
{
  Vector v;
  for (int x : xs)
    v.emplace_back(x);
  return v;
}

} // namespace

TEST(RowEchelon, RankAndReduce)
{
  RowEchelon e(3);
  EXPECT_TRUE(e.insert(vec({1, 2, 3})));
  EXPECT_TRUE(e.insert(vec({2, 4, 7})));
  EXPECT_FALSE(e.insert(vec({3, 6, 10})));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.contains(vec({0, 0, 5})));
  EXPECT_FALSE(e.contains(vec({0, 1, 0})));
  EXPECT_EQ(e.free_columns(), std::vector<std::size_t>{1});
}

TEST(RowEchelon, NormalFormIsCanonical)
{
  RowEchelon e(4);
  e.insert(vec({1, 1, 0, 0}));
  e.insert(vec({0, 0, 1, 1}));
  auto a = e.reduce(vec({3, 0, 2, 0}));
  auto b = e.reduce(vec({0, -3, 0, -2}));
  EXPECT_EQ(a, b);
}

TEST(RowEchelon, Fractions)
{
  RowEchelon e(2);
  e.insert(vec({3, 1}));
  auto r = e.reduce(vec({1, 0}));
  EXPECT_EQ(r[0], Rational(0));
  EXPECT_EQ(r[1], Rational(-1, 3));
}

TEST(SpanDim, Basic)
{
  std::vector<Vector> vs = {vec({1, 0, 1}), vec({0, 1, 1}), vec({1, 1, 2})};
  EXPECT_EQ(span_dim(vs), 2u);
  EXPECT_EQ(span_dim(std::span<Vector const>{}), 0u);
}

TEST(QuotientBasis, GreedyOrder)
{
  std::vector<Vector> sub = {vec({1, 1, 0})};
  std::vector<Vector> cand = {vec({2, 2, 0}), vec({1, 0, 0}), vec({0, 1, 0}),
                              vec({0, 0, 1})};
  EXPECT_EQ(quotient_basis(cand, sub), (std::vector<std::size_t>{1, 3}));
}

TEST(Solve, ConsistentWithKernel)
{
  Matrix a = {vec({1, 2, 1}), vec({2, 4, 0})};
  auto s = solve(a, vec({2, 2}));
  ASSERT_TRUE(s);
  ASSERT_EQ(s->kernel.size(), 1u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational lhs = 0, k = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      lhs += a[i][j] * s->particular[j];
      k += a[i][j] * s->kernel[0][j];
    }
    EXPECT_EQ(lhs, (i == 0 ? 2 : 2));
    EXPECT_EQ(k, 0);
  }
}

TEST(Solve, Inconsistent)
{
  Matrix a = {vec({1, 1}), vec({2, 2})};
  EXPECT_FALSE(solve(a, vec({1, 3})));
}

TEST(Property, RankNullity)
{
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    int const rows = 1 + trial % 5, cols = 1 + (trial / 5) % 6;
    Matrix a(rows, Vector(cols));
    for (auto &r : a)
      for (auto &x : r)
        x = d(rng) * (d(rng) > 0 ? 1 : 0);
    RowEchelon e(cols);
    for (auto const &r : a)
      e.insert(r);
    auto s = solve(a, Vector(rows, Rational(0)));
    ASSERT_TRUE(s);
    EXPECT_EQ(e.rank() + s->kernel.size(), static_cast<std::size_t>(cols));
  }
}
