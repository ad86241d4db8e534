#include <gtest/gtest.h>

#include "orbitcat/ar_quiver.hpp"
#include "orbitcat/oracle.hpp"
#include "orbitcat/quiver.hpp"

using namespace orbitcat;
using namespace orbitcat::oracle;

TEST(Build, IntervalModules)
{
  Quiver q = dynkin_quiver("A3");
  auto pa = build_indecomposable(q, {1, 1, 1});
  ASSERT_EQ(pa.maps.size(), 2u);
  for (auto const &m : pa.maps)
    EXPECT_EQ(m, (FieldMatrix{{1}}));
  auto sb = build_indecomposable(q, {0, 1, 0});
  EXPECT_EQ(sb.dims, (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(oracle_hom_dim(q, sb, sb), 1);
}

TEST(Build, D4HighestRootIsBrick)
{
  Quiver q = dynkin_quiver("D4");
  DimVector top(4, 1);
  top[*q.index_of("b")] = 2;
  auto m = build_indecomposable(q, top);
  EXPECT_EQ(m.dims, top);
  EXPECT_EQ(oracle_hom_dim(q, m, m), 1);
}

TEST(Build, ReflectionWalkMatchesIntervals)
{
  for (auto t : {"A2", "A3", "A4"}) {
    Quiver q = dynkin_quiver(t, Orientation::Sink);
    for (auto const &r : positive_roots(q)) {
      auto a = build_indecomposable(q, r);
      auto b = build_by_reflection(q, r);
      EXPECT_EQ(oracle_hom_dim(q, a, b), 1) << t;
      EXPECT_EQ(oracle_hom_dim(q, b, a), 1) << t;
    }
  }
}

TEST(Hom, Examples)
{
  Quiver q = dynkin_quiver("A3");
  auto pc = build_indecomposable(q, {0, 0, 1});
  auto pa = build_indecomposable(q, {1, 1, 1});
  auto sa = build_indecomposable(q, {1, 0, 0});
  auto sb = build_indecomposable(q, {0, 1, 0});
  EXPECT_EQ(oracle_hom_dim(q, pc, pa), 1);
  EXPECT_EQ(oracle_hom_dim(q, sa, sb), 0);
  EXPECT_EQ(oracle_ext1(q, sa, sb), 1);
  EXPECT_EQ(rank_mod({{1, 2}, {2, 4}}, 101), 1u);
  EXPECT_EQ(rank_mod({{1, 2}, {2, 5}}, 101), 2u);
}

TEST(Property, ProjectivesAndBricks)
{
  for (auto t : {"A1", "A2", "A3", "A4", "D4", "D5"}) {
    Quiver q = dynkin_quiver(t);
    auto ar = knit_module_category(q);
    std::vector<Representation> reps;
    for (auto const &d : ar.dims)
      reps.push_back(build_indecomposable(q, d));
    for (int v = 0; v < q.num_vertices(); ++v) {
      auto p = projective(q, v);
      for (auto const &n : reps)
        EXPECT_EQ(oracle_ext1(q, p, n), 0) << t;
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      EXPECT_EQ(oracle_hom_dim(q, reps[i], reps[i]), 1) << t;
      EXPECT_EQ(oracle_ext1(q, reps[i], reps[i]), 0) << t;
      for (std::size_t j = 0; j < reps.size(); ++j)
        EXPECT_EQ(oracle_hom_dim(q, reps[i], reps[j]) -
                      oracle_ext1(q, reps[i], reps[j]),
                  euler_form(q, ar.dims[i], ar.dims[j]));
    }
  }
}

TEST(Property, CoxeterFunctorIsTauInverse)
{
  Quiver q = dynkin_quiver("D4");
  auto ar = knit_module_category(q);
  for (int v = 0; v < q.num_vertices(); ++v) {
    auto p = projective(q, v);
    auto next = coxeter_minus(q, p);
    int id = ar.proj[v];
    ASSERT_TRUE(ar.tau_inv[id]);
    EXPECT_EQ(next.dims, ar.dims[*ar.tau_inv[id]]);
  }
}

TEST(Property, EngineAgreementTwoPrimes)
{
  for (auto t : {"A1", "A2", "A3", "A4", "D4"}) {
    DerivedModel m(dynkin_quiver(t));
    for (std::int64_t p : {101, 32003}) {
      auto rep = compare_with_engine(m, p);
      EXPECT_TRUE(rep.passed()) << t << " p=" << p;
      EXPECT_EQ(rep.pairs, m.ar().size() * m.ar().size());
    }
  }
}
