#include <gtest/gtest.h>

#include "orbitcat/derived.hpp"
#include "orbitcat/error.hpp"
#include "orbitcat/quiver.hpp"

using namespace orbitcat;

namespace
{

std::vector<std::string> const types = {"A1", "A2", "A3", "A4", "D4", "D5"};

DerivedObject P(DerivedModel const &m, char v, int s = 0)
{
  return {m.ar().proj[*m.quiver().index_of(std::string(1, v))], s};
}
DerivedObject I(DerivedModel const &m, char v, int s = 0)
{
  return {m.ar().inj[*m.quiver().index_of(std::string(1, v))], s};
}
DerivedObject S(DerivedModel const &m, char v, int s = 0)
{
  return {m.ar().simple[*m.quiver().index_of(std::string(1, v))], s};
}

} // namespace

TEST(Window, Sizes)
{
  auto w0 = build_window(dynkin_quiver("A3"), 0, 0);
  int modules = 0;
  for (auto x : w0.objects())
    modules += x.shift == 0;
  EXPECT_EQ(modules, 6);

  auto w1 = build_window(dynkin_quiver("A3"), 0, 1);
  int labelled = 0;
  for (auto x : w1.objects())
    labelled += x.shift == 0 || x.shift == 1;
  EXPECT_EQ(labelled, 12);

  auto wa = build_window(dynkin_quiver("A1"), 0, 2);
  for (int s = 0; s <= 2; ++s)
    EXPECT_TRUE(wa.contains(DerivedObject{0, s}));
  EXPECT_EQ(tau_map(wa, DerivedObject{0, 2}), (DerivedObject{0, 1}));
  EXPECT_THROW(build_window(dynkin_quiver("A1"), 1, 2), Error);
}

TEST(Window, OutOfWindow)
{
  auto w = build_window(dynkin_quiver("A3"), 0, 0);
  // Guard slices k_min and k_max belong to the window; their images under
  // shift, F and tau leave it.
  DerivedObject first = w.model->label(ZVertex{w.k_min, 0});
  DerivedObject last = w.model->label(ZVertex{w.k_max, 0});
  ASSERT_TRUE(w.contains(first) && w.contains(last));
  EXPECT_THROW(shift_map(w, last), OutOfWindow);
  EXPECT_THROW(F_map(w, last), OutOfWindow);
  EXPECT_THROW(tau_map(w, first), OutOfWindow);
  EXPECT_THROW(shift_map(w, DerivedObject{0, 3}), OutOfWindow);
}

TEST(VertexMaps, Examples)
{
  DerivedModel m(dynkin_quiver("A3"));
  for (char v : {'a', 'b', 'c'}) {
    EXPECT_EQ(m.F(I(m, v, 0)), P(m, v, 2));
    EXPECT_EQ(m.serre(P(m, v, 0)), I(m, v, 0));
    EXPECT_EQ(m.label(m.tau_inv(m.locate(I(m, v, 0)))), P(m, v, 1));
  }
  // F(S_b) = (tau^{-1} S_b)[1] and tau^{-1} S_b = I_a = S_a.
  auto f = m.F(S(m, 'b'));
  EXPECT_EQ(f.shift, 1);
  EXPECT_EQ(m.ar().dims[f.module], (DimVector{1, 0, 0}));
  EXPECT_EQ(m.tau(I(m, 'b', 0)), P(m, 'b', 0));
}

TEST(VertexMaps, Commute)
{
  for (auto const &t : types) {
    DerivedModel m(dynkin_quiver(t));
    for (int id = 0; id < m.ar().size(); ++id)
      for (int s = -1; s <= 1; ++s) {
        ZVertex z = m.locate({id, s});
        EXPECT_EQ(m.shift(m.tau(z)), m.tau(m.shift(z)));
        EXPECT_EQ(m.F(m.serre(z)), m.serre(m.F(z)));
        EXPECT_EQ(m.F(z, 3), m.F(m.F(m.F(z))));
        EXPECT_EQ(m.shift(z, -2), m.shift(m.shift(z, -1), -1));
        EXPECT_EQ(m.label(m.shift(z)), (DerivedObject{id, s + 1}));
        EXPECT_EQ(m.locate(m.label(z)), z);
      }
  }
}

TEST(HomDim, Examples)
{
  DerivedModel m(dynkin_quiver("A3"));
  EXPECT_EQ(m.hom_dim(P(m, 'c'), P(m, 'a')), 1);
  EXPECT_EQ(m.hom_dim(P(m, 'a'), P(m, 'c')), 0);
  EXPECT_EQ(m.hom_dim(S(m, 'a'), S(m, 'b', 1)), 1);
  EXPECT_EQ(m.hom_dim(S(m, 'a'), S(m, 'b')), 0);
  EXPECT_EQ(m.hom_dim(P(m, 'a'), S(m, 'b', 1)), 0);
}

TEST(Property, Hereditary)
{
  for (auto const &t : types) {
    DerivedModel m(dynkin_quiver(t));
    int const n = m.ar().size();
    for (int x = 0; x < n; ++x) {
      EXPECT_EQ(m.hom_dim(DerivedObject{x, 0}, DerivedObject{x, 0}), 1);
      EXPECT_EQ(m.hom_dim(DerivedObject{x, 0}, DerivedObject{x, 1}), 0);
      for (int y = 0; y < n; ++y)
        for (int s : {-2, -1, 2, 3})
          EXPECT_EQ(m.hom_dim(DerivedObject{x, 0}, DerivedObject{y, s}), 0);
    }
  }
}

TEST(Property, SerreDualityAndEuler)
{
  for (auto const &t : types) {
    DerivedModel m(dynkin_quiver(t));
    int const n = m.ar().size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int s : {0, 1}) {
          DerivedObject a{x, 0}, b{y, s};
          EXPECT_EQ(m.hom_dim(a, b), m.hom_dim(b, m.serre(a))) << t;
          EXPECT_TRUE(euler_check(m, a, b)) << t;
          // Invariance under the automorphisms.
          EXPECT_EQ(m.hom_dim(a, b), m.hom_dim(m.F(a), m.F(b)));
          EXPECT_EQ(m.hom_dim(a, b), m.hom_dim(m.tau(a), m.tau(b)));
        }
  }
}

TEST(Euler, A1)
{
  DerivedModel m(dynkin_quiver("A1"));
  EXPECT_EQ(m.hom_dim(DerivedObject{0, 0}, DerivedObject{0, 1}), 0);
  EXPECT_TRUE(euler_check(m, {0, 0}, {0, 1}));
  EXPECT_TRUE(euler_check(m, {0, 0}, {0, 0}));
}

TEST(Hammock, Shape)
{
  DerivedModel m(dynkin_quiver("D4"));
  for (int x = 0; x < m.ar().size(); ++x) {
    auto const &h = m.hammock(m.ar().position[x]);
    EXPECT_EQ(h.at(h.base), 1);
    for (auto [z, v] : h.values)
      EXPECT_GT(v, 0);
  }
}

TEST(Names, Literals)
{
  DerivedModel m(dynkin_quiver("A3"));
  EXPECT_EQ(m.name(P(m, 'a')), "P_a[0]");
  EXPECT_EQ(m.name(S(m, 'b', 1)), "S_b[1]");
  EXPECT_EQ(m.name(I(m, 'b', -1)), "I_b[-1]");
}
