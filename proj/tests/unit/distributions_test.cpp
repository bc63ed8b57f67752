#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "nlft/distributions.hpp"
#include "nlft/partitions.hpp"
#include "nlft/rng.hpp"
#include "oracles.hpp"

using namespace nlft;

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST(BetaFn, Values) {
  EXPECT_DOUBLE_EQ(beta_fn(1, 1), 1.0);
  EXPECT_NEAR(beta_fn(2, 3), 1.0 / 12.0, 1e-16);
  EXPECT_NEAR(beta_fn(0.5, 0.5), std::numbers::pi, 1e-13);
  EXPECT_NEAR(beta_fn(30, 25), std::exp(std::lgamma(30) + std::lgamma(25) - std::lgamma(55)), 1e-28);
  EXPECT_THROW(beta_fn(0.0, 1.0), std::invalid_argument);
}

TEST(BetaFn, Symmetric) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(0.1, 12.0);
  for (int i = 0; i < 200; ++i) {
    const double a = d(rng), b = d(rng);
    EXPECT_NEAR(beta_fn(a, b), beta_fn(b, a), 1e-14 * beta_fn(a, b));
  }
}

TEST(BetaPdf, Values) {
  for (double x : {0.0, 0.2, 0.77, 1.0}) EXPECT_DOUBLE_EQ(beta_pdf(x, BetaShape(1, 1)), 1.0);
  EXPECT_NEAR(beta_pdf(0.5, BetaShape(2, 2)), 1.5, 1e-15);
  EXPECT_THROW(beta_pdf(1.5, BetaShape(2, 2)), std::domain_error);
  EXPECT_THROW(BetaShape(0.0, 1.0), std::invalid_argument);
}

TEST(BetaPdf, IntegratesToOne) {
  for (auto [a, b] : std::array<std::pair<double, double>, 3>{{{2, 3}, {3, 3}, {1, 2}}}) {
    const BetaShape shape(a, b);
    EXPECT_NEAR(oracle::simpson([&](double x) { return beta_pdf(x, shape); }, 0.0, 1.0, 2000), 1.0, 1e-8);
  }
}

TEST(BetaPdf, ExponentConventionBridge) {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const BetaShape shape = BetaShape::from_exponents(a, b);
      EXPECT_EQ(shape.alpha(), a + 1.0);
      EXPECT_EQ(shape.beta(), b + 1.0);
      for (int i = 0; i < 50; ++i) {
        const double x = (i + 0.5) / 50.0;
        const double written = factorial(a + b + 1) / (factorial(a) * factorial(b)) * std::pow(x, a) * std::pow(1 - x, b);
        EXPECT_NEAR(beta_pdf(x, shape), written, 1e-12 * (1 + written));
      }
    }
  }
}

TEST(FiberShape, EvenAndOdd) {
  EXPECT_EQ(fiber_shape(2).alpha(), 1.0);
  EXPECT_EQ(fiber_shape(2).beta(), 2.0);
  EXPECT_EQ(fiber_shape(3).alpha(), 2.0);
  EXPECT_EQ(fiber_shape(3).beta(), 2.0);
  EXPECT_EQ(fiber_shape(6).alpha(), 3.0);
  EXPECT_EQ(fiber_shape(6).beta(), 4.0);
}

TEST(VolFormula, LowDimensions) {
  for (double l : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    EXPECT_NEAR(vol_formula(1, l), 1.0, 1e-15);
    EXPECT_NEAR(vol_formula(2, l), 1.0 - l, 1e-15);
    EXPECT_NEAR(vol_formula(3, l), l * (1.0 - l), 1e-15);
  }
}

TEST(VolFormula, Endpoints) {
  for (int d = 2; d <= 10; ++d) {
    EXPECT_EQ(vol_formula(d, 1.0), 0.0) << d;
    if (d >= 3) EXPECT_EQ(vol_formula(d, 0.0), 0.0) << d;
  }
  EXPECT_EQ(vol_formula(2, 0.0), 1.0);
}

TEST(VolFormula, ScaledIsDensity) {
  for (int d = 1; d <= 10; ++d) {
    const double integral = oracle::simpson([&](double l) { return factorial(d) * vol_formula(d, l); }, 0.0, 1.0, 2000);
    EXPECT_NEAR(integral, 1.0, 1e-8) << d;
  }
}

TEST(VolMc, TwoPartsAtHalf) {
  const auto est = vol_mc(2, 0.5, 0.02, 1'000'000, 42);
  EXPECT_EQ(est.samples, 1'000'000u);
  EXPECT_GT(est.standard_error, 0.0);
  EXPECT_LT(std::abs(est.estimate - 0.5), 3 * est.standard_error);
}

TEST(VolMc, FourPartsAtThreeCenters) {
  for (double center : {0.25, 0.5, 0.75}) {
    const auto est = vol_mc(4, center, 0.02, 1'000'000, 7);
    EXPECT_LT(std::abs(est.estimate - vol_formula(4, center)), 3 * est.standard_error) << center;
  }
}

TEST(VolMc, ThreePartsMatchesScaledCount) {
  const auto est = vol_mc(3, 0.4, 0.02, 1'000'000, 3);
  EXPECT_LT(std::abs(est.estimate - 0.4 * 0.6), 3 * est.standard_error);
  const int grid = 500;
  const double scaled = aq_closed(grid, 200, 3).convert_to<double>() / (grid * grid);
  EXPECT_NEAR(scaled, 0.24, 5e-3);
}

TEST(VolMc, DeterministicPerSeed) {
  const auto a = vol_mc(3, 0.5, 0.05, 20000, 99);
  const auto b = vol_mc(3, 0.5, 0.05, 20000, 99);
  const auto c = vol_mc(3, 0.5, 0.05, 20000, 100);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_NE(a.hits, c.hits);
}

TEST(VolMc, RejectsBadArguments) {
  EXPECT_THROW(vol_mc(1, 0.5, 0.02, 100000, 1), std::invalid_argument);
  EXPECT_THROW(vol_mc(2, 0.5, 0.02, 100, 1), std::invalid_argument);
  EXPECT_THROW(vol_mc(2, 0.5, 0.0, 100000, 1), std::invalid_argument);
  EXPECT_THROW(vol_mc(8, 0.999, 0.0001, 10000, 1), std::domain_error);
}

TEST(CounterRng, ReproducibleAndSplittable) {
  CounterRng a(5), b(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  EXPECT_EQ(a.position(), 100u);
  CounterRng s1 = CounterRng(5).split(1), s2 = CounterRng(5).split(2);
  EXPECT_NE(s1.next_u64(), s2.next_u64());
  double mean = 0.0;
  CounterRng u(11);
  for (int i = 0; i < 100000; ++i) {
    const double x = u.uniform();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
    mean += x;
  }
  EXPECT_NEAR(mean / 100000, 0.5, 0.005);
}

TEST(DiscreteBeta, UniformCase) {
  const int grid = 40;
  EXPECT_EQ(discrete_beta_unnormalized(grid, 0, 0, 0), 0.0);
  for (int l = 1; l < grid; ++l) EXPECT_DOUBLE_EQ(discrete_beta_unnormalized(grid, l, 0, 0), 1.0);
  EXPECT_NEAR(c_norm(grid, 0, 0), grid / (grid - 1.0), 1e-12);
}

TEST(DiscreteBeta, VanishesAtZero) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) EXPECT_EQ(discrete_beta_pmf(DiscreteBetaSpec(20, a, b), 0), 0.0);
  }
}

TEST(DiscreteBeta, NormalizedAgainstScaledCounting) {
  for (auto [a, b] : std::array<std::pair<int, int>, 2>{{{1, 1}, {2, 3}}}) {
    const DiscreteBetaSpec spec(50, a, b);
    double total = 0.0;
    for (int l = 0; l < 50; ++l) total += discrete_beta_pmf(spec, l);
    EXPECT_NEAR(total / 50, 1.0, 1e-12);
    EXPECT_GT(spec.normalizer(), 0.0);
  }
}

TEST(DiscreteBeta, UnnormalizedMatchesBinomials) {
  const int grid = 30, a = 2, b = 3;
  for (int l = 0; l < grid; ++l) {
    const double expected = factorial(a + b + 1) / std::pow(grid, a + b) *
                            binomial(l - 1, a).convert_to<double>() * binomial(grid - l, b).convert_to<double>();
    EXPECT_NEAR(discrete_beta_unnormalized(grid, l, a, b), expected, 1e-13);
  }
}

TEST(CNorm, HalvingAndRejects) {
  double previous = std::abs(c_norm(64, 2, 3) - 1.0);
  for (int grid : {128, 256}) {
    const double current = std::abs(c_norm(grid, 2, 3) - 1.0);
    EXPECT_GT(current / previous, 0.3);
    EXPECT_LT(current / previous, 0.7);
    previous = current;
  }
  EXPECT_THROW(c_norm(5, 2, 3), std::invalid_argument);
}

TEST(LatticeIndex, RoundsAndClamps) {
  EXPECT_EQ(lattice_index(0.3, 64), 19);
  EXPECT_EQ(lattice_index(0.5, 64), 32);
  EXPECT_EQ(lattice_index(1.0, 64), 63);
  EXPECT_EQ(lattice_index(0.0, 64), 0);
}

TEST(ConvergenceTable, HalfAtSymmetricShape) {
  const std::array<int, 4> sizes{64, 128, 256, 512};
  const auto rows = convergence_table(1, 1, 0.5, sizes);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_DOUBLE_EQ(rows.back().continuous_at_lambda, 1.5);
  EXPECT_NEAR(rows.back().discrete, 1.5, 0.02);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i].abs_err, rows[i - 1].abs_err);
}

TEST(ConvergenceTable, ErrorRatiosNearOneHalf) {
  const std::array<int, 4> sizes{64, 128, 256, 512};
  for (auto [a, b] : std::array<std::pair<int, int>, 3>{{{0, 0}, {1, 1}, {2, 3}}}) {
    for (double lambda : {0.3, 0.5}) {
      const auto rows = convergence_table(a, b, lambda, sizes);
      for (std::size_t i = 1; i < rows.size(); ++i) {
        const double ratio = rows[i].abs_err / rows[i - 1].abs_err;
        EXPECT_GT(ratio, 0.3) << a << b << lambda;
        EXPECT_LT(ratio, 0.7) << a << b << lambda;
      }
    }
  }
}

TEST(ConvergenceTable, ZeroLambda) {
  const std::array<int, 3> sizes{32, 64, 128};
  for (const auto& row : convergence_table(1, 2, 0.0, sizes)) {
    EXPECT_EQ(row.discrete, 0.0);
    EXPECT_EQ(row.continuous, 0.0);
  }
}

TEST(AqLimit, KnownTargets) {
  const std::array<int, 3> sizes{100, 200, 400};
  const auto two = aq_beta_limit_check(2, 0.5, sizes);
  EXPECT_NEAR(two.back().density_target, 1.0, 1e-15);
  EXPECT_NEAR(two.back().scaled_aq, 1.0, 1e-12);
  const auto three = aq_beta_limit_check(3, 0.5, sizes);
  EXPECT_NEAR(three.back().density_target, 1.5, 1e-15);
  EXPECT_NEAR(three.back().scaled_aq, 1.5, 0.01);
  EXPECT_NEAR(three.back().volume_target, 0.25, 1e-15);
  for (const auto& row : aq_beta_limit_check(1, 0.3, sizes)) EXPECT_NEAR(row.scaled_aq, 1.0, 1e-15);
}

TEST(AqLimit, ErrorsDecrease) {
  const std::array<int, 3> sizes{100, 200, 400};
  for (int d : {2, 3, 4}) {
    for (double lambda : {0.25, 0.3, 0.5, 0.75}) {
      const auto rows = aq_beta_limit_check(d, lambda, sizes);
      for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(rows[i].abs_err, rows[i - 1].abs_err + 1e-12);
      EXPECT_LT(rows.back().abs_err, 0.05);
    }
  }
}
