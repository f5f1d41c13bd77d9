#include <gtest/gtest.h>

#include <cmath>

#include "envelope/errors.hpp"
#include "envelope/model.hpp"
#include "oracles.hpp"

using namespace envelope;

namespace {

// Halving h must cut the central-difference error by about four.
void expect_second_order(const Interaction& w, double x) {
  const double h = 1e-3 * std::max(1.0, x);
  const auto coarse = oracles::derivative_error(w, x, h);
  const auto fine = oracles::derivative_error(w, x, h / 2);
  const double scale = std::max({1.0, std::abs(w.d1(x)), std::abs(w.d2(x))});
  EXPECT_LT(fine.d1, 1e-5 * scale) << w.label << " at " << x;
  EXPECT_LT(fine.d2, 1e-4 * scale) << w.label << " at " << x;
  if (coarse.d1 > 1e-9 * scale) {
    EXPECT_NEAR(coarse.d1 / fine.d1, 4.0, 0.5) << w.label << " at " << x;
  }
}

}  // namespace

TEST(Interaction, AnalyticDerivativesAgreeWithDifferences) {
  const std::vector<Interaction> all = {
      interactions::nonrelativistic_kinetic(0.7), interactions::ultrarelativistic_kinetic(),
      interactions::power(1.3, 1.0),             interactions::power(-0.4, -1.0),
      interactions::power(2.0, 0.37),            interactions::power(0.5, 3.0),
      interactions::gaussian_well(8.0, 1.3),     interactions::logarithmic(0.8, 2.0)};
  for (const auto& w : all) {
    for (double x : {0.3, 0.9, 1.7, 4.2}) {
      expect_second_order(w, x);
    }
  }
}

TEST(Interaction, ZeroIsIdenticallyZero) {
  const Interaction z = Interaction::zero();
  for (double x : {0.1, 1.0, 7.0}) {
    EXPECT_EQ(z(x), 0.0);
    EXPECT_EQ(z.d1(x), 0.0);
    EXPECT_EQ(z.d2(x), 0.0);
  }
}

TEST(SystemSpec, RejectsTooFewParticlesOrDimensions) {
  const auto t = interactions::nonrelativistic_kinetic(1.0);
  EXPECT_THROW(SystemSpec(1, 3, t, Interaction::zero(), Interaction::zero()), DomainError);
  EXPECT_THROW(SystemSpec(2, 1, t, Interaction::zero(), Interaction::zero()), DomainError);
  const SystemSpec ok(4, 3, t, Interaction::zero(), interactions::power(1.0, 2.0));
  EXPECT_DOUBLE_EQ(ok.pair_count(), 6.0);
  EXPECT_EQ(ok.variational(), Bound::none);
  EXPECT_EQ(ok.with_variational(Bound::upper).variational(), Bound::upper);
  EXPECT_EQ(ok.name(), "custom");
}

TEST(QuantumNumbers, GlobalQ) {
  const auto t = interactions::nonrelativistic_kinetic(1.0);
  const SystemSpec two(2, 3, t, Interaction::zero(), Interaction::zero());
  const SystemSpec three(3, 3, t, Interaction::zero(), Interaction::zero());
  EXPECT_DOUBLE_EQ(global_q(QuantumNumbers::from_modes({0}, {0}), two), 1.5);
  EXPECT_DOUBLE_EQ(global_q(QuantumNumbers::from_modes({0, 0}, {0, 0}), three), 3.0);
  EXPECT_DOUBLE_EQ(global_q(QuantumNumbers::from_modes({1, 0}, {0, 0}), three), 5.0);
}

TEST(QuantumNumbers, NuLambda) {
  const auto t = interactions::nonrelativistic_kinetic(1.0);
  const SystemSpec two(2, 3, t, Interaction::zero(), Interaction::zero());
  const SystemSpec three(3, 3, t, Interaction::zero(), Interaction::zero());
  const SystemSpec five_2d(5, 2, t, Interaction::zero(), Interaction::zero());
  EXPECT_EQ(nu_lambda(QuantumNumbers::from_modes({0}, {0}), two), std::make_pair(0.5, 0.5));
  EXPECT_EQ(nu_lambda(QuantumNumbers::from_modes({0, 0}, {1, 0}), three),
            std::make_pair(1.0, 2.0));
  EXPECT_EQ(nu_lambda(QuantumNumbers::from_modes({0, 0, 0, 0}, {0, 0, 0, 0}), five_2d),
            std::make_pair(2.0, 0.0));
}

TEST(QuantumNumbers, QIsTwoNuPlusLambdaAndDegenerate) {
  const auto t = interactions::nonrelativistic_kinetic(1.0);
  for (int n = 2; n <= 6; ++n) {
    for (int d = 2; d <= 4; ++d) {
      const SystemSpec spec(n, d, t, Interaction::zero(), Interaction::zero());
      for (int ns = 0; ns <= 4; ++ns) {
        for (int ls = 0; ls <= 4; ++ls) {
          const auto g = global_numbers(QuantumNumbers::from_sums(ns, ls), spec);
          EXPECT_EQ(g.q, 2 * g.nu + g.lambda);
          // Only 2 sum(n) + sum(l) matters for Q.
          if (ls >= 2) {
            const auto h = global_numbers(QuantumNumbers::from_sums(ns + 1, ls - 2), spec);
            EXPECT_EQ(g.q, h.q);
          }
        }
      }
    }
  }
}

TEST(QuantumNumbers, Errors) {
  const auto t = interactions::nonrelativistic_kinetic(1.0);
  const SystemSpec three(3, 3, t, Interaction::zero(), Interaction::zero());
  EXPECT_THROW(QuantumNumbers::from_modes({0}, {0, 1}), DomainError);
  EXPECT_THROW(QuantumNumbers::from_modes({-1}, {0}), DomainError);
  EXPECT_THROW(QuantumNumbers::from_sums(0, -1), DomainError);
  EXPECT_THROW(global_numbers(QuantumNumbers::from_modes({0}, {0}), three), ShapeError);
}

TEST(QPhi, Values) {
  EXPECT_DOUBLE_EQ(q_phi(1.0, 1.0, 2.0), 3.0);
  EXPECT_DOUBLE_EQ(q_phi(1.0, 1.0, 1.35), 2.35);
  EXPECT_DOUBLE_EQ(q_phi(1.0, 2.0, 1.2402), 3.2402);
  EXPECT_THROW(q_phi(1.0, 1.0, 0.0), DomainError);
  EXPECT_THROW(q_phi(0.0, 1.0, 2.0), DomainError);
  EXPECT_THROW(q_phi(1.0, -1.0, 2.0), DomainError);
}

TEST(BoundTag, Names) {
  EXPECT_STREQ(to_string(Bound::upper), "upper");
  EXPECT_STREQ(to_string(Bound::lower), "lower");
  EXPECT_STREQ(to_string(Bound::none), "none");
}
