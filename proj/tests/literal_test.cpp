#include <gtest/gtest.h>

#include "orbitcat/error.hpp"
#include "orbitcat/literal.hpp"
#include "orbitcat/quiver.hpp"

using namespace orbitcat;

namespace
{

struct A3 : ::testing::Test
{
  DerivedModel dm{dynkin_quiver("A3")};

  int v(char c) const { return *dm.quiver().index_of(std::string(1, c)); }
  DerivedObject P(char c, int s = 0) const { return {dm.ar().proj[v(c)], s}; }
  DerivedObject I(char c, int s = 0) const { return {dm.ar().inj[v(c)], s}; }
  DerivedObject S(char c, int s = 0) const
  {
    return {dm.ar().simple[v(c)], s};
  }
};

} // namespace

TEST_F(A3, Basic)
{
  EXPECT_EQ(parse_object(dm, "P_a"), P('a'));
  EXPECT_EQ(parse_object(dm, "I_b[1]"), I('b', 1));
  EXPECT_EQ(parse_object(dm, "S_c[-2]"), S('c', -2));
  EXPECT_EQ(parse_object(dm, "  P_b  "), P('b'));
  EXPECT_EQ(parse_object(dm, "dim=(0,1,0)"), S('b'));
  EXPECT_EQ(parse_object(dm, "dim=(1,1,1)[3]").shift, 3);
}

TEST_F(A3, Functors)
{
  EXPECT_EQ(parse_object(dm, "F(P_a)"), dm.F(P('a')));
  EXPECT_EQ(parse_object(dm, "F^-2(S_b)[1]"),
            dm.shift(dm.F(S('b'), -2), 1));
  EXPECT_EQ(parse_object(dm, "tau(I_a)"), dm.tau(I('a')));
  EXPECT_EQ(parse_object(dm, "tau^-1(tau(P_c))"), P('c'));
  EXPECT_EQ(parse_object(dm, "F^0(P_b)"), P('b'));
}

TEST_F(A3, Lists)
{
  auto l = parse_object_list(dm, "P_a, P_c ,S_a");
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], P('a'));
  EXPECT_EQ(l[1], P('c'));
  EXPECT_EQ(l[2], S('a'));
  EXPECT_EQ(parse_object_list(dm, "F(P_a),P_b").size(), 2u);
}

TEST_F(A3, Errors)
{
  for (auto bad : {"Q_a", "P_z", "P_a[", "P_a[x]", "dim=(1,0,1)",
                   "dim=(1,1)", "F^(P_a)", "F(P_a", "P_a junk", "P_a,,P_b"}) {
    EXPECT_THROW(parse_object_list(dm, bad), ParseError) << bad;
  }
  EXPECT_THROW(parse_object(dm, ""), ParseError);
  EXPECT_TRUE(parse_object_list(dm, "").empty());
  EXPECT_TRUE(parse_object_list(dm, "  ").empty());
  try {
    parse_object(dm, "P_a[x]");
    FAIL();
  } catch (ParseError const &e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 5);
  }
}

TEST(DimVector, Parse)
{
  EXPECT_EQ(parse_dim_vector("(1,0,2)"), (DimVector{1, 0, 2}));
  EXPECT_EQ(parse_dim_vector("1, 0, 2"), (DimVector{1, 0, 2}));
  EXPECT_EQ(parse_dim_vector("dim=(0,1)"), (DimVector{0, 1}));
  EXPECT_THROW(parse_dim_vector("(1,-1)"), ParseError);
  EXPECT_THROW(parse_dim_vector("(1,a)"), ParseError);
}
