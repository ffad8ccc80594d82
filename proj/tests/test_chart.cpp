#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace toricmon;

namespace {

std::vector<MonoidSpec> chart_specs() {
  std::vector<MonoidSpec> out;
  for (long n = 1; n <= 3; ++n) {
    for (long b = 0; b <= 3; ++b) {
      out.push_back(MonoidSpec::x(n, 1, b));
      out.push_back(MonoidSpec::y(n, 1, b));
    }
    for (long k = 0; k <= 2; ++k)
      out.push_back(MonoidSpec::x(n, 2, 2 * k + 1));
  }
  return out;
}

/// Random chart point: torus points, boundary points and the origin.
ChartPoint random_point(const MonoidSpec &s, oracle::RandomRationals &rng) {
  long kind = rng.integer(0, 5);
  if (kind == 0)
    return zero_point(s);
  if (kind == 1) {
    if (require_chart(s) == ChartKind::Quadric)
      return ChartPoint{0, 0, rng.any(5)};
    return ChartPoint{rng.any(5), 0};
  }
  return from_torus(s, rng.nonzero(5), rng.nonzero(5));
}

ChartPoint scaled(const ChartPoint &p, const Rational &c) {
  std::vector<Rational> out;
  for (const auto &v : p.coords)
    out.push_back(c * v);
  return ChartPoint(out);
}

} // namespace

TEST(Chart, Support) {
  EXPECT_EQ(chart_kind(MonoidSpec::x(2, 1, 3)), ChartKind::PlaneX);
  EXPECT_EQ(chart_kind(MonoidSpec::y(2, 1, 3)), ChartKind::PlaneY);
  EXPECT_EQ(chart_kind(MonoidSpec::x(2, 2, 3)), ChartKind::Quadric);
  EXPECT_FALSE(chart_kind(MonoidSpec::y(2, 2, 3)).has_value());
  EXPECT_FALSE(chart_kind(MonoidSpec::group(2)).has_value());
  ChartPoint p{1, 1};
  EXPECT_THROW(multiply_points(MonoidSpec::x(1, 3, 1), p, p), not_implemented_chart);
  EXPECT_THROW(multiply_points(MonoidSpec::y(1, 2, 1), p, p), not_implemented_chart);
  EXPECT_THROW(multiply_points(MonoidSpec::group(1), p, p), not_implemented_chart);
  EXPECT_THROW(multiply_points(MonoidSpec::x(1, 1, 1), ChartPoint{1, 1, 1}, p), invalid_argument);
  EXPECT_THROW(multiply_points(MonoidSpec::x(1, 2, 1), ChartPoint{1, 1, 2}, ChartPoint{1, 1, 1}),
               invalid_argument);
}

TEST(Chart, Examples) {
  MonoidSpec x111 = MonoidSpec::x(1, 1, 1);
  EXPECT_EQ(multiply_points(x111, ChartPoint{1, 2}, ChartPoint{3, 4}), (ChartPoint{16, 8}));
  for (long n = 1; n <= 3; ++n)
    for (long b = 0; b <= 3; ++b) {
      MonoidSpec s = MonoidSpec::x(n, 1, b);
      EXPECT_EQ(unit_point(s), (ChartPoint{0, 1}));
      EXPECT_EQ(multiply_points(s, ChartPoint{0, 1}, ChartPoint{ratio(2, 5), -3}),
                (ChartPoint{ratio(2, 5), -3}));
    }
  // X(1,1,1): (1,2)·(3,4) via the comultiplication at torus points.
  auto p = to_torus(x111, ChartPoint{1, 2}), q = to_torus(x111, ChartPoint{3, 4});
  ASSERT_TRUE(p && q);
  for (const auto &g : chart_generators(x111))
    EXPECT_EQ(evaluate(comult(x111, g), *p, *q),
              evaluate(chi(g), ratio(16, 8), 8)); // x = X / Y^b
}

TEST(Chart, QuadricThirdCoordinate) {
  // X(n,2,2k+1) with x = y1 = ... via torus coordinates, checked against the
  // symbolic comultiplication of the three generators.
  for (long n = 1; n <= 3; ++n)
    for (long k = 0; k <= 2; ++k) {
      MonoidSpec s = MonoidSpec::x(n, 2, 2 * k + 1);
      ChartPoint p = from_torus(s, 2, 3), q = from_torus(s, -1, ratio(1, 2));
      ChartPoint r = multiply_points(s, p, q);
      EXPECT_EQ(r[0] * r[2], r[1] * r[1]);
      auto tp = to_torus(s, p), tq = to_torus(s, q);
      auto gens = chart_generators(s);
      for (std::size_t i = 0; i < 3; ++i)
        EXPECT_EQ(r[i], evaluate(comult(s, gens[i]), *tp, *tq)) << to_string(s) << " " << i;
    }
}

TEST(ChartProperties, UnitalAndAssociative) {
  oracle::RandomRationals rng(41);
  for (const auto &s : chart_specs()) {
    ChartPoint e = unit_point(s);
    for (int trial = 0; trial < 100; ++trial) {
      ChartPoint p = random_point(s, rng), q = random_point(s, rng), r = random_point(s, rng);
      ASSERT_EQ(multiply_points(s, e, p), p) << to_string(s);
      ASSERT_EQ(multiply_points(s, p, e), p) << to_string(s);
      ASSERT_EQ(multiply_points(s, multiply_points(s, p, q), r),
                multiply_points(s, p, multiply_points(s, q, r)))
          << to_string(s);
    }
  }
}

TEST(ChartProperties, PointAndSymbolicLevelsAgree) {
  oracle::RandomRationals rng(42);
  for (const auto &s : chart_specs()) {
    auto basis = semigroup_generators(cone2_of_spec(s));
    for (int trial = 0; trial < 20; ++trial) {
      ChartPoint p = from_torus(s, rng.nonzero(5), rng.nonzero(5));
      ChartPoint q = from_torus(s, rng.nonzero(5), rng.nonzero(5));
      auto tp = *to_torus(s, p), tq = *to_torus(s, q);
      auto tr = to_torus(s, multiply_points(s, p, q));
      ASSERT_TRUE(tr.has_value());
      for (const auto &u : basis)
        ASSERT_EQ(evaluate(comult(s, u), tp, tq), evaluate(chi(u), tr->first, tr->second))
            << to_string(s) << " u=" << to_string(u);
    }
  }
}

TEST(ChartProperties, GroupElementsMatchTorusPoints) {
  oracle::RandomRationals rng(43);
  for (const auto &s : chart_specs())
    for (int trial = 0; trial < 10; ++trial) {
      Rational alpha = rng.nonzero(), tau = rng.nonzero();
      ChartPoint g = group_element(s, alpha, tau);
      auto t = to_torus(s, g);
      ASSERT_TRUE(t.has_value());
      if (s.family() == Family::X)
        EXPECT_EQ(*t, std::pair(alpha, tau));
    }
}

TEST(ChartBoundary, ZeroProducts) {
  oracle::RandomRationals rng(44);
  for (long n = 1; n <= 4; ++n)
    for (long b = 1; b <= 4; ++b) {
      MonoidSpec s = MonoidSpec::x(n, 1, b);
      ASSERT_TRUE(boundary(s).has_zero);
      for (int trial = 0; trial < 50; ++trial) {
        ChartPoint p{rng.any(), 0}, q{rng.any(), 0};
        EXPECT_EQ(multiply_points(s, p, q), zero_point(s));
      }
      ChartPoint g = from_torus(s, rng.nonzero(), rng.nonzero());
      EXPECT_EQ(multiply_points(s, zero_point(s), g), zero_point(s));
      EXPECT_EQ(multiply_points(s, g, zero_point(s)), zero_point(s));
    }
}

TEST(ChartBoundary, IdempotentLine) {
  oracle::RandomRationals rng(45);
  for (long n = 1; n <= 4; ++n) {
    MonoidSpec s = MonoidSpec::x(n, 1, 0);
    for (int trial = 0; trial < 30; ++trial) {
      Rational x1 = rng.any(), x2 = rng.any();
      EXPECT_EQ(multiply_points(s, ChartPoint{x1, 0}, ChartPoint{x2, 0}), (ChartPoint{x1, 0}));
    }
  }
}

TEST(ChartBoundary, TorusWeights) {
  oracle::RandomRationals rng(46);
  for (long n = 1; n <= 4; ++n)
    for (long b = 0; b <= 4; ++b) {
      MonoidSpec s = MonoidSpec::x(n, 1, b);
      BoundaryInfo info = boundary(s);
      for (int trial = 0; trial < 20; ++trial) {
        Rational tau = rng.nonzero(), x = rng.nonzero();
        ChartPoint t = group_element(s, 0, tau), p{x, 0};
        EXPECT_EQ(multiply_points(s, t, p), scaled(p, pow(tau, info.left_weight)));
        EXPECT_EQ(multiply_points(s, p, t), scaled(p, pow(tau, info.right_weight)));
      }
    }
}

// Y weights are stated for the coordinate χ^(0,-1) = τ^-1 of its chart.
TEST(ChartBoundary, TorusWeightsOpposite) {
  oracle::RandomRationals rng(47);
  for (long n = 1; n <= 3; ++n)
    for (long b = 0; b <= 3; ++b) {
      MonoidSpec s = MonoidSpec::y(n, 1, b);
      BoundaryInfo info = boundary(s);
      for (int trial = 0; trial < 10; ++trial) {
        Rational tau = rng.nonzero(), x = rng.nonzero();
        ChartPoint t = group_element(s, 0, tau), p{x, 0};
        EXPECT_EQ(multiply_points(s, t, p), scaled(p, pow(1 / tau, info.left_weight)));
        EXPECT_EQ(multiply_points(s, p, t), scaled(p, pow(1 / tau, info.right_weight)));
      }
    }
}

// X(2,3,2) = X(6,1,2)/C_3. On the quotient the boundary coordinate is w = X^3
// and the torus parameter is τ^3.
TEST(ChartBoundary, QuotientWeights) {
  MonoidSpec big = MonoidSpec::x(6, 1, 2), small = MonoidSpec::x(2, 3, 2);
  ASSERT_EQ(quotient_by_center(big, 3), small);
  BoundaryInfo info = boundary(small);
  ASSERT_EQ(info.left_weight, 8);
  ASSERT_EQ(info.right_weight, 2);
  oracle::RandomRationals rng(48);
  for (int trial = 0; trial < 20; ++trial) {
    Rational tau = rng.nonzero(), x = rng.nonzero();
    ChartPoint t = group_element(big, 0, tau), p{x, 0};
    Rational w = pow(x, Integer(3)), t3 = pow(tau, Integer(3));
    EXPECT_EQ(pow(multiply_points(big, t, p)[0], Integer(3)), pow(t3, info.left_weight) * w);
    EXPECT_EQ(pow(multiply_points(big, p, t)[0], Integer(3)), pow(t3, info.right_weight) * w);
  }
}
