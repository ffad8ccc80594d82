#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace toricmon;

namespace {

const LatticePoint ray_x(1, 0, Ambient::N);

DerivationRule delta_l() { return DerivationRule(LatticePoint(-1, 0), ray_x); }
DerivationRule delta_r(long n) { return DerivationRule(LatticePoint(-1, n), ray_x); }

} // namespace

TEST(Derive, LeftRightIterates) {
  for (long n = 1; n <= 3; ++n)
    for (long a = 0; a <= 5; ++a)
      for (long b = 0; b <= 3; ++b) {
        LaurentElement f = chi(a, b);
        EXPECT_EQ(derive(delta_l(), f), Rational(a) * chi(a - 1, b)) << a;
        EXPECT_EQ(derive_iterated(delta_l(), f, a), Rational(factorial(a)) * chi(0, b));
        EXPECT_EQ(derive_iterated(delta_r(n), f, a), Rational(factorial(a)) * chi(0, b + n * a));
        EXPECT_TRUE(derive_iterated(delta_l(), f, a + 1).is_zero());
      }
}

TEST(Derive, KernelAndScale) {
  EXPECT_TRUE(derive(delta_l(), chi(0, 4)).is_zero());
  DerivationRule scaled(LatticePoint(-1, 0), ray_x, ratio(-2, 3));
  EXPECT_EQ(derive(scaled, chi(3, 1)), Rational(-2) * chi(2, 1));
  EXPECT_THROW(DerivationRule(LatticePoint(-1, 0), ray_x, 0), invalid_argument);
}

TEST(Derive, Leibniz) {
  oracle::RandomRationals rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    DerivationRule d(LatticePoint(rng.integer(-2, 2), rng.integer(-2, 2)),
                     LatticePoint(rng.integer(-2, 2), rng.integer(-2, 2), Ambient::N),
                     rng.nonzero());
    LaurentElement f = oracle::random_laurent(rng), g = oracle::random_laurent(rng);
    EXPECT_EQ(derive(d, f * g), derive(d, f) * g + f * derive(d, g));
  }
}

TEST(LocallyNilpotent, Examples) {
  Cone2 quadrant(LatticePoint(0, 1), LatticePoint(1, 0));
  EXPECT_TRUE(is_locally_nilpotent_on(delta_l(), quadrant, 6));
  EXPECT_FALSE(is_locally_nilpotent_on(DerivationRule(LatticePoint(1, 0), ray_x), quadrant, 6));
  // δ_r leaves the cone {(0,1),(1,0)} only for n < 0
  EXPECT_TRUE(is_locally_nilpotent_on(delta_r(2), quadrant, 6));
  EXPECT_FALSE(is_locally_nilpotent_on(delta_r(-1), quadrant, 6));
  EXPECT_THROW(is_locally_nilpotent_on(delta_l(), quadrant, 0), invalid_argument);
}
