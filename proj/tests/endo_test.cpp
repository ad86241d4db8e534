#include <gtest/gtest.h>

#include <memory>

#include "orbitcat/endo.hpp"
#include "orbitcat/error.hpp"
#include "orbitcat/literal.hpp"
#include "orbitcat/quiver.hpp"

using namespace orbitcat;

namespace
{

std::shared_ptr<MeshCategory const> mesh(std::string const &t)
{
  return std::make_shared<MeshCategory>(
      std::make_shared<DerivedModel>(dynkin_quiver(t)));
}

ObjectSet objs(OrbitCategory const &c, std::string const &text)
{
  ObjectSet out;
  for (auto x : parse_object_list(c.model(), text))
    out.push_back(c.canonical(x));
  return normalized(out);
}

ObjectSet example(OrbitCategory const &c1) { return objs(c1, "P_a,P_c,S_a"); }

} // namespace

TEST(BasedAlgebra, ExampleDimensions)
{
  auto mc = mesh("A3");
  OrbitCategory c1(mc, 1);
  ObjectSet t0 = example(c1);
  for (int m : {1, 2, 3}) {
    OrbitCategory cm(mc, m);
    BasedAlgebra alg(cm, fiber_closure(cm, c1, t0));
    EXPECT_EQ(alg.dim(), 6 * m) << "m=" << m;
    EXPECT_EQ(alg.num_summands(), 3 * m);
  }
}

TEST(BasedAlgebra, A1)
{
  OrbitCategory c(mesh("A1"), 1);
  BasedAlgebra alg(c, {0});
  EXPECT_EQ(alg.dim(), 1);
  auto g = gabriel_quiver(alg);
  EXPECT_EQ(g.num_arrows(), 0);
}

TEST(BasedAlgebra, IdempotentsAndUnit)
{
  OrbitCategory c(mesh("A3"), 2);
  OrbitCategory c1(mesh("A3"), 1);
  BasedAlgebra alg(c, fiber_closure(c, c1, example(c1)));
  int const r = alg.num_summands();
  for (int i = 0; i < r; ++i) {
    int e = alg.identity(i);
    Vector ee = alg.multiply(e, e);
    for (int k = 0; k < alg.dim(); ++k)
      EXPECT_EQ(ee[k], k == e ? 1 : 0);
    for (int j = 0; j < r; ++j)
      if (j != i) {
        EXPECT_TRUE(is_zero(alg.multiply(e, alg.identity(j))));
      }
    for (int b : alg.block(i, (i + 1) % r)) {
      Vector left = alg.multiply(e, b);
      for (int k = 0; k < alg.dim(); ++k)
        EXPECT_EQ(left[k], k == b ? 1 : 0);
    }
  }
}

TEST(BasedAlgebra, GradingAdditive)
{
  auto mc = mesh("A3");
  OrbitCategory c1(mc, 1), c(mc, 3);
  BasedAlgebra alg(c, fiber_closure(c, c1, example(c1)));
  auto const &basis = alg.basis();
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = 0; b < alg.dim(); ++b) {
      Vector p = alg.multiply(a, b);
      for (int k = 0; k < alg.dim(); ++k)
        if (p[k] != 0) {
          EXPECT_EQ(basis[k].degree, basis[a].degree + basis[b].degree);
        }
    }
}

TEST(BasedAlgebra, Associative)
{
  OrbitCategory c(mesh("A4"), 1);
  auto all = enumerate_cluster_tilting(c);
  BasedAlgebra alg(c, all[all.size() / 2]);
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = 0; b < alg.dim(); ++b)
      for (int d = 0; d < alg.dim(); ++d) {
        Vector ab = alg.multiply(a, b);
        Vector bd = alg.multiply(b, d);
        Vector unit_d(alg.dim(), 0), unit_a(alg.dim(), 0);
        unit_d[d] = 1;
        unit_a[a] = 1;
        EXPECT_EQ(alg.multiply(ab, unit_d), alg.multiply(unit_a, bd));
      }
}

TEST(Gabriel, ExampleCycles)
{
  auto mc = mesh("A3");
  OrbitCategory c1(mc, 1);
  ObjectSet t0 = example(c1);
  for (int m : {1, 2, 3}) {
    OrbitCategory cm(mc, m);
    auto g = gabriel_quiver(BasedAlgebra(cm, fiber_closure(cm, c1, t0)));
    EXPECT_TRUE(is_oriented_cycle(g)) << "m=" << m;
    EXPECT_EQ(g.size(), 3 * m);
    EXPECT_EQ(g.rad2_dim(), 0);
    EXPECT_TRUE(isomorphic(g, cycle_quiver(3 * m)));
  }
}

TEST(Gabriel, HereditaryIsQuiver)
{
  Quiver q = dynkin_quiver("A3");
  OrbitCategory c(q, 1);
  auto g = gabriel_quiver(BasedAlgebra(c, objs(c, "P_a,P_b,P_c")));
  EXPECT_EQ(g.num_arrows(), q.num_arrows());
  EXPECT_TRUE(is_oriented_line(g));
  EXPECT_FALSE(is_oriented_cycle(g));
}

TEST(Isomorphism, Basics)
{
  EXPECT_TRUE(isomorphic(cycle_quiver(4), cycle_quiver(4)));
  EXPECT_FALSE(isomorphic(cycle_quiver(4), cycle_quiver(5)));
  GabrielQuiver line;
  line.names = {"0", "1", "2"};
  line.arrows = {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  line.rad = line.arrows;
  line.rad2 = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  GabrielQuiver rev = line;
  rev.arrows = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  rev.rad = rev.arrows;
  EXPECT_TRUE(isomorphic(line, rev));
  GabrielQuiver v = line;
  v.arrows = {{0, 1, 1}, {0, 0, 0}, {0, 0, 0}};
  v.rad = v.arrows;
  EXPECT_FALSE(isomorphic(line, v));
  EXPECT_TRUE(is_oriented_line(line));
  EXPECT_FALSE(is_oriented_line(v));
}

TEST(Covering, RhoExample)
{
  auto mc = mesh("A3");
  OrbitCategory c1(mc, 1);
  for (int m : {1, 2, 3}) {
    OrbitCategory cm(mc, m);
    auto rep = covering_check_rho(cm, c1, example(c1));
    EXPECT_TRUE(rep.passed()) << "m=" << m;
    EXPECT_EQ(rep.order, m);
    EXPECT_TRUE(rep.free_action);
    EXPECT_TRUE(rep.quotient_matches);
  }
}

TEST(Covering, PiExample)
{
  OrbitCategory c1(mesh("A3"), 1);
  auto w = window_quiver(c1, example(c1), 3);
  EXPECT_EQ(w.vertices.size(), 21u);
  EXPECT_EQ(w.interior.size(), 15u);
  EXPECT_TRUE(is_oriented_line(w.interior_quiver));
  EXPECT_EQ(w.interior_quiver.rad2_dim(), 0);
  for (int m : {1, 2})
    EXPECT_TRUE(covering_check_pi(c1, example(c1), m, 3).passed());
  EXPECT_THROW(window_quiver(c1, example(c1), 0), WindowTooSmall);
}

TEST(Property, FreeCoveringActionSweep)
{
  for (auto type : {"A2", "A3"}) {
    auto mc = mesh(type);
    OrbitCategory c1(mc, 1);
    auto base = enumerate_cluster_tilting(c1);
    for (int m : {2, 3}) {
      OrbitCategory cm(mc, m);
      for (auto const &t0 : base) {
        auto rep = covering_check_rho(cm, c1, t0);
        EXPECT_TRUE(rep.free_action) << type << " m=" << m;
        EXPECT_TRUE(rep.passed());
        BasedAlgebra alg(cm, fiber_closure(cm, c1, t0));
        BasedAlgebra alg1(c1, t0);
        EXPECT_EQ(alg.dim(), m * alg1.dim());
      }
    }
  }
}

TEST(TrivialExtension, Example)
{
  OrbitCategory c1(mesh("A3"), 1);
  auto rep = trivial_ext_check(c1, example(c1), 2);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.dimension, 6);
  EXPECT_EQ(rep.degree0, 5);
  EXPECT_EQ(rep.degree1, 1);
  EXPECT_EQ(rep.cover_dimension, 12);

  auto proj = trivial_ext_check(c1, objs(c1, "P_a,P_b,P_c"));
  EXPECT_TRUE(proj.passed());
  EXPECT_TRUE(proj.tilting_module);
  EXPECT_EQ(proj.dimension, 6);
  EXPECT_EQ(proj.degree1, 0);
}

TEST(ModuleModel, ExampleMatrix)
{
  OrbitCategory c1(mesh("A3"), 1);
  auto q = module_model(c1, example(c1));
  ASSERT_EQ(q.objects.size(), 6u);
  std::vector<std::vector<int>> expected = {
      {1, 1, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 1, 0},
      {0, 0, 0, 1, 1, 0}, {1, 0, 0, 0, 1, 1}, {1, 0, 0, 0, 0, 1}};
  EXPECT_EQ(q.hom, expected);

  OrbitCategory a1(mesh("A1"), 1);
  EXPECT_EQ(module_model(a1, {0}).objects.size(), 1u);
}

TEST(Prop26, EverySummand)
{
  for (auto type : {"A2", "A3"}) {
    OrbitCategory c1(mesh(type), 1);
    for (auto const &t : enumerate_cluster_tilting(c1))
      for (int x : t)
        EXPECT_TRUE(prop26_check(c1, t, x).passed) << type;
  }
}

TEST(CorpusMatch, ExampleIsClusterTilted)
{
  OrbitCategory c1(mesh("A3"), 1);
  auto g = gabriel_quiver(BasedAlgebra(c1, example(c1)));
  auto match = match_cluster_tilted(g, {"A2", "A3"});
  ASSERT_TRUE(match);
  EXPECT_EQ(match->type, "A3");
  EXPECT_FALSE(match_cluster_tilted(cycle_quiver(5), {"A3"}));
}
