#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "envelope/errors.hpp"
#include "envelope/specfun.hpp"
#include "oracles.hpp"

using envelope::specfun::beta;
using envelope::specfun::lambert_w0;
using envelope::specfun::log_beta;
using envelope::specfun::quartic_root_g;
using envelope::specfun::QuarticSign;

TEST(LambertW0, SpecialValues) {
  EXPECT_EQ(lambert_w0(0.0), 0.0);
  EXPECT_NEAR(lambert_w0(std::numbers::e), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(lambert_w0(-1.0 / std::numbers::e), -1.0);
}

TEST(LambertW0, FrozenValue) {
  // mpmath.lambertw(-0.265165042944955321)
  EXPECT_NEAR(lambert_w0(-0.265165042944955321), -0.392704186405280749, 1e-15);
}

TEST(LambertW0, MatchesBisection) {
  for (double z : {-0.36, -0.3, -0.1, -1e-6, 1e-6, 0.5, 3.0, 42.0, 1e3, 1e5}) {
    EXPECT_NEAR(lambert_w0(z), oracles::lambert_w0(z), 1e-12 * std::max(1.0, std::abs(z)))
        << "z = " << z;
  }
}

TEST(LambertW0, RoundTrip) {
  for (int i = 0; i <= 1100; ++i) {
    const double w = -1.0 + i * 0.01;
    const double z = w * std::exp(w);
    // Conditioning degrades as w -> -1, where dz/dw vanishes.
    const double tol = w < -0.9 ? 1e-6 : (w < -0.5 ? 1e-11 : 1e-12);
    EXPECT_NEAR(lambert_w0(z), w, tol * std::max(1.0, std::abs(w))) << "w = " << w;
  }
}

TEST(LambertW0, RejectsBelowBranchPoint) {
  EXPECT_THROW(lambert_w0(-0.5), envelope::DomainError);
  EXPECT_NO_THROW(lambert_w0(-1.0 / std::numbers::e - 1e-16));
}

TEST(QuarticRootG, MinusAtZero) {
  EXPECT_NEAR(quartic_root_g(QuarticSign::minus, 0.0), std::cbrt(2.0), 1e-15);
}

TEST(QuarticRootG, FrozenMinusOne) {
  // (1 + sqrt 3) / 2 solves 4x^4 - 8x - 3 = 0.
  EXPECT_NEAR(quartic_root_g(QuarticSign::minus, 1.0), 1.36602540378443864676, 1e-15);
  EXPECT_NEAR(quartic_root_g(QuarticSign::minus, 1.0), oracles::quartic_root(-1, 1.0), 1e-13);
}

TEST(QuarticRootG, PlusSmallY) {
  const double g = quartic_root_g(QuarticSign::plus, 0.01);
  EXPECT_NEAR(g, 0.00374999990112305716, 1e-18);
  EXPECT_NEAR(g, 3.0 * 0.01 / 8.0, 1e-9);
}

TEST(QuarticRootG, ResidualOnLogGrid) {
  for (QuarticSign sign : {QuarticSign::plus, QuarticSign::minus}) {
    const double s = sign == QuarticSign::plus ? 1.0 : -1.0;
    for (int i = 0; i <= 120; ++i) {
      const double y = std::pow(10.0, -6.0 + 0.1 * i);
      const double x = quartic_root_g(sign, y);
      ASSERT_GT(x, 0.0);
      const double residual = 4.0 * std::pow(x, 4) + s * 8.0 * x - 3.0 * y;
      EXPECT_LE(std::abs(residual), 1e-12 * std::max(1.0, y)) << "y = " << y;
      EXPECT_NEAR(x, oracles::quartic_root(sign == QuarticSign::plus ? 1 : -1, y),
                  1e-12 * std::max(1.0, x));
    }
  }
}

TEST(QuarticRootG, MinusBranchIncreasing) {
  double prev = quartic_root_g(QuarticSign::minus, 0.0);
  for (int i = 1; i <= 200; ++i) {
    const double g = quartic_root_g(QuarticSign::minus, 0.05 * i);
    EXPECT_GT(g, prev);
    prev = g;
  }
}

TEST(QuarticRootG, Domain) {
  EXPECT_THROW(quartic_root_g(QuarticSign::minus, -1.0), envelope::DomainError);
  EXPECT_THROW(quartic_root_g(QuarticSign::plus, 0.0), envelope::DomainError);
}

TEST(Beta, SpecialValues) {
  EXPECT_NEAR(beta(1.0, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(beta(0.5, 0.5), std::numbers::pi, 1e-14);
  EXPECT_NEAR(beta(1.0, 1.5), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(beta(0.5, 1.5), std::numbers::pi / 2.0, 1e-14);
}

TEST(Beta, Symmetric) {
  for (double x : {0.1, 0.7, 2.5, 30.0, 200.0}) {
    for (double y : {0.2, 1.3, 9.0, 150.0}) {
      EXPECT_NEAR(beta(x, y), beta(y, x), 1e-14 * beta(x, y));
      EXPECT_NEAR(log_beta(x, y), std::log(beta(x, y)), 1e-12 * std::max(1.0, std::abs(log_beta(x, y))));
    }
  }
}

TEST(Beta, Domain) {
  EXPECT_THROW(beta(0.0, 1.0), envelope::DomainError);
  EXPECT_THROW(log_beta(1.0, -2.0), envelope::DomainError);
}
