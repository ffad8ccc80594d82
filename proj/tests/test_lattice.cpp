#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace toricmon;

namespace {

LatticePoint m(long x, long y) { return {x, y, Ambient::M}; }
LatticePoint nn(long x, long y) { return {x, y, Ambient::N}; }

} // namespace

TEST(Numeric, FloorCeilDivision) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(ceil_div(7, 2), 4);
  EXPECT_EQ(ceil_div(-7, 2), -3);
  EXPECT_EQ(ceil_div(8, 3), 3);
  EXPECT_EQ(ceil_div(6, 3), 2);
}

TEST(Numeric, RationalText) {
  EXPECT_EQ(to_string(ratio(3, 2)), "3/2");
  EXPECT_EQ(to_string(ratio(-4, 2)), "-2");
  EXPECT_EQ(parse_rational("6/-4"), ratio(-3, 2));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_THROW(parse_rational("1/0"), invalid_argument);
  EXPECT_THROW(parse_rational("x"), invalid_argument);
  EXPECT_EQ(pow(ratio(2, 3), Integer(-2)), ratio(9, 4));
  EXPECT_THROW(pow(Rational(0), Integer(-1)), pole_error);
}

TEST(Pairing, Examples) {
  EXPECT_EQ(pairing(m(1, 0), nn(1, 0)), 1);
  for (long l = -3; l <= 3; ++l)
    EXPECT_EQ(pairing(m(-1, l), nn(1, 0)), -1);
  EXPECT_EQ(pairing(m(4, 7), nn(-7, 4)), 0);
}

TEST(Pairing, AmbientMismatch) {
  EXPECT_THROW(pairing(m(1, 0), m(1, 0)), invalid_argument);
  EXPECT_THROW(pairing(nn(1, 0), m(1, 0)), invalid_argument);
}

TEST(Primitive, Examples) {
  EXPECT_EQ(primitive(m(2, 4)), m(1, 2));
  EXPECT_EQ(primitive(m(0, -3)), m(0, -1));
  EXPECT_EQ(primitive(m(-3, 5)), m(-3, 5));
  EXPECT_THROW(primitive(m(0, 0)), invalid_argument);
}

TEST(Primitive, GcdOneAndPositiveMultiple) {
  for (long x = -12; x <= 12; ++x)
    for (long y = -12; y <= 12; ++y) {
      if (x == 0 && y == 0)
        continue;
      LatticePoint v = m(x, y), p = primitive(v);
      EXPECT_EQ(gcd(p.x, p.y), 1);
      Integer d = gcd(v.x, v.y);
      EXPECT_GT(d, 0);
      EXPECT_EQ(d * p, v);
    }
}

TEST(LatticeMapTest, IdentityAndExamples) {
  EXPECT_EQ(apply_map(LatticeMap::identity(), m(5, -3)), m(5, -3));
  // (1,0;-n,-1) acting on the rays of σ∨(n,a,b)
  const long n = 2, a = 3, b = 1;
  LatticeMap opp(1, 0, -n, -1);
  EXPECT_EQ(opp(m(0, 1)), m(0, -1));
  EXPECT_EQ(opp(m(a, b)), m(a, -n * a - b));
  EXPECT_EQ(opp(m(1, 0)), m(1, -n));
  // (1,0;0,m)
  LatticeMap scale(1, 0, 0, 5);
  EXPECT_EQ(scale(m(2, 3)), m(2, 15));
}

TEST(LatticeMapTest, Inverse) {
  LatticeMap g(2, 1, 1, 1);
  EXPECT_TRUE(g.is_unimodular());
  EXPECT_EQ(g * g.inverse(), LatticeMap::identity());
  EXPECT_THROW(LatticeMap(2, 0, 0, 1).inverse(), invalid_argument);
}

TEST(LatticeMapTest, SolveLinearMap) {
  // Exchanging (0,1) and (3,2) is integral; exchanging (0,1) and (5,2) is not.
  RationalMap t = solve_linear_map(m(0, 1), m(3, 2), m(3, 2), m(0, 1));
  EXPECT_TRUE(t.is_integral());
  EXPECT_EQ(t.to_lattice_map(), LatticeMap(-2, 3, -1, 2));
  RationalMap u = solve_linear_map(m(0, 1), m(5, 2), m(5, 2), m(0, 1));
  EXPECT_FALSE(u.is_integral());
  EXPECT_EQ(u(RationalPoint(m(0, 1))), RationalPoint(m(5, 2)));
  EXPECT_EQ(u(RationalPoint(m(5, 2))), RationalPoint(m(0, 1)));
  RationalMap swap = solve_linear_map(m(1, 0), m(0, 1), m(0, 1), m(1, 0));
  EXPECT_TRUE(swap.is_integral());
  EXPECT_EQ(swap.to_lattice_map(), LatticeMap(0, 1, 1, 0));
}
