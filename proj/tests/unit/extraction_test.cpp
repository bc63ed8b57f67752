#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nlft/extraction.hpp"
#include "nlft/jet.hpp"
#include "nlft/partitions.hpp"
#include "nlft/transforms.hpp"
#include "oracles.hpp"

using namespace nlft;

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Matrix2c random_matrix(std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  return {{d(rng), d(rng)}, {d(rng), d(rng)}, {d(rng), d(rng)}, {d(rng), d(rng)}};
}

SpectralSequence sequence_of(int grid, const std::function<Matrix2c(long long)>& f) {
  SpectralSequence seq{grid, 0, {}};
  for (long long n = 0; n < grid; ++n) seq.values.push_back(f(n));
  return seq;
}

Signal indicator(int grid, std::initializer_list<int> hot) {
  std::vector<double> u(static_cast<std::size_t>(grid), 0.0);
  for (int j : hot) u[static_cast<std::size_t>(j)] += 1.0;
  return Signal::real(u);
}

}  // namespace

TEST(Idft, Orthogonality) {
  std::mt19937_64 rng(1);
  const int grid = 8;
  const Matrix2c m = random_matrix(rng);
  for (int l0 = 0; l0 < grid; ++l0) {
    const auto seq = sequence_of(grid, [&](long long n) { return e_delta(-2 * l0, n, grid) * m; });
    for (int l = 0; l < grid; ++l) {
      const Matrix2c expected = l == l0 ? m : Matrix2c::zero();
      EXPECT_LT(max_diff(idft_matrix(seq, l), expected), 1e-13);
    }
  }
}

TEST(Idft, ConstantSequence) {
  const Matrix2c m{1.0, 2.0, 3.0, 4.0};
  const auto seq = sequence_of(7, [&](long long) { return m; });
  EXPECT_LT(max_diff(idft_matrix(seq, 0), m), 1e-14);
  for (int l = 1; l < 7; ++l) EXPECT_LT(max_diff(idft_matrix(seq, l), Matrix2c::zero()), 1e-14);
}

TEST(Idft, Linearity) {
  std::mt19937_64 rng(2);
  const int grid = 9;
  std::vector<Matrix2c> a, b;
  for (int n = 0; n < grid; ++n) {
    a.push_back(random_matrix(rng));
    b.push_back(random_matrix(rng));
  }
  const Complex alpha(0.3, -1.2), beta(-2.0, 0.5);
  const auto sa = sequence_of(grid, [&](long long n) { return a[n]; });
  const auto sb = sequence_of(grid, [&](long long n) { return b[n]; });
  const auto sc = sequence_of(grid, [&](long long n) { return alpha * a[n] + beta * b[n]; });
  for (int l = 0; l < grid; ++l) {
    EXPECT_LT(max_diff(idft_matrix(sc, l), alpha * idft_matrix(sa, l) + beta * idft_matrix(sb, l)), 1e-13);
  }
}

TEST(Idft, RejectsPartialSequence) {
  SpectralSequence seq{4, 0, {Matrix2c::identity(), Matrix2c::identity()}};
  EXPECT_THROW(idft_matrix(seq, 0), std::invalid_argument);
  SpectralSequence shifted{2, 1, {Matrix2c::identity(), Matrix2c::identity()}};
  EXPECT_THROW(idft_matrix(shifted, 0), std::invalid_argument);
}

TEST(Unscale, SyntheticRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> value(0, 5000);
  for (int grid : {3, 8, 13}) {
    for (int d = 1; d <= 5; ++d) {
      std::vector<int> table(static_cast<std::size_t>(grid));
      for (int& t : table) t = value(rng);
      const auto seq = sequence_of(grid, [&](long long n) {
        Matrix2c sum = Matrix2c::zero();
        for (int l = 0; l < grid; ++l) sum += static_cast<double>(table[l]) * e_delta(-2 * l, n, grid);
        return std::pow(static_cast<double>(grid), -d) * (sum * j_power(d));
      });
      for (int l = 0; l < grid; ++l) {
        const Complex got = unscale_coefficient(seq, l, d);
        EXPECT_LT(std::abs(got - static_cast<double>(table[l])), 1e-9) << grid << ' ' << d << ' ' << l;
      }
    }
  }
}

TEST(Unscale, RejectsNonScalar) {
  const auto seq = sequence_of(4, [](long long) { return Matrix2c{1.0, 1.0, 0.0, 1.0}; });
  EXPECT_THROW(unscale_coefficient(seq, 0, 0), std::runtime_error);
}

TEST(FnPoly, LowOrderCoefficients) {
  for (int grid : {1, 4, 7}) {
    const auto poly = f_n_poly(grid, 0, grid);
    ASSERT_EQ(poly.size(), static_cast<std::size_t>(grid) + 1);
    EXPECT_LT(max_diff(poly[0], Matrix2c::identity()), 1e-15);
    EXPECT_LT(max_diff(poly[1], j_power(1)), 1e-14);
  }
  EXPECT_THROW(f_n_poly(3, 0, 4), std::invalid_argument);
}

TEST(FnPoly, HornerMatchesProduct) {
  for (int grid : {2, 5, 10}) {
    for (int n = 0; n < grid; ++n) {
      const Matrix2c direct = f_n(Signal::constant(grid, 0.1), n);
      EXPECT_LT(max_diff(evaluate(f_n_poly(grid, n, grid), 0.1), direct), 1e-10);
    }
  }
}

TEST(FnPoly, CoefficientsEncodeAlternatingCounts) {
  for (int grid = 1; grid <= 7; ++grid) {
    for (int n = 0; n < grid; ++n) {
      const auto poly = f_n_poly(grid, n, grid);
      for (int d = 1; d <= grid; ++d) {
        Matrix2c expected = Matrix2c::zero();
        for (int l = 0; l < grid; ++l) expected += aq_brute(grid, l, d).convert_to<double>() * e_delta(-2 * l, n, grid);
        expected = std::pow(static_cast<double>(grid), -d) * (expected * j_power(d));
        EXPECT_LT(max_diff(poly[static_cast<std::size_t>(d)], expected), 1e-12) << grid << ' ' << n << ' ' << d;
      }
    }
  }
}

TEST(ExtractAq, Examples) {
  for (int grid = 1; grid <= 10; ++grid) {
    for (int l = 0; l < grid; ++l) EXPECT_EQ(extract_aq(grid, l, 1), 1);
  }
  EXPECT_EQ(extract_aq(6, 2, 4), 6);
  const auto detail = extract_aq_detail(6, 2, 4);
  EXPECT_LT(detail.residue, 1e-9);
  EXPECT_NEAR(detail.raw, 6.0, 1e-9);
}

TEST(ExtractAq, EqualsEnumerationUpToTen) {
  for (int grid = 1; grid <= 10; ++grid) {
    for (int d = 1; d <= grid; ++d) {
      for (int l = 0; l < grid; ++l) ASSERT_EQ(extract_aq(grid, l, d), aq_brute(grid, l, d)) << grid << ' ' << l << ' ' << d;
    }
  }
}

TEST(ExtractAq, WholeTableMatchesClosedFormAtThirty) {
  const auto all = extract_aq_all(30, 15);
  for (int l = 0; l < 30; ++l) {
    EXPECT_LT(all[l].residue, 1e-6);
    EXPECT_EQ(all[l].value, aq_closed(30, l, 15)) << l;
    if (l < 5) EXPECT_EQ(all[l].value, extract_aq(30, l, 15));
  }
}

TEST(DJet, ZeroOrderIsIdentity) {
  const Signal u = Signal::real({0.3, -0.2, 0.9});
  for (int n = 0; n < 3; ++n) EXPECT_LT(max_diff(d_jet(u, n, 0), Matrix2c::identity()), 1e-15);
}

TEST(DJet, FirstOrderTwoSamples) {
  const double u0 = 0.7, u1 = -0.4;
  const Signal u = Signal::real({u0, u1});
  for (int n = 0; n < 2; ++n) {
    const Matrix2c expected = (u0 / 2) * (e_delta(0, n, 2) * j_power(1)) + (u1 / 2) * (e_delta(-2, n, 2) * j_power(1));
    EXPECT_LT(max_diff(d_jet(u, n, 1), expected), 1e-15);
  }
}

TEST(DJet, MatchesFiniteDifferences) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> dist(0.0, 2.0);
  for (int grid : {2, 3, 6}) {
    std::vector<double> base(static_cast<std::size_t>(grid));
    for (double& v : base) v = dist(rng);
    const Signal u = Signal::real(base);
    for (int n = 0; n < grid; ++n) {
      const std::function<Matrix2c(double)> ray = [&](double s) {
        std::vector<double> scaled = base;
        for (double& v : scaled) v *= s;
        return g_n(Signal::real(scaled), n);
      };
      for (int d = 1; d <= 4; ++d) {
        const Matrix2c fd = oracle::central_difference(ray, d, 0.1);
        EXPECT_LT(max_diff(d_jet(u, n, d), fd), 1e-6) << grid << ' ' << n << ' ' << d;
      }
    }
  }
}

TEST(Jet, ChainRuleMatchesFiniteDifferences) {
  const Jet inner(6, {0.3, 0.7, 0.2, -0.1, 0.0, 0.0, 0.0});
  const auto cs = cos_sin(inner);
  const auto g = [](double s) { return 0.3 + 0.7 * s + 0.2 * s * s - 0.1 * s * s * s; };
  const std::function<double(double)> c = [&](double s) { return std::cos(g(s)); };
  const std::function<double(double)> si = [&](double s) { return std::sin(g(s)); };
  for (int d = 0; d <= 4; ++d) {
    EXPECT_NEAR(factorial(d) * cs.cos[d], oracle::central_difference(c, d, 0.05), 1e-6) << d;
    EXPECT_NEAR(factorial(d) * cs.sin[d], oracle::central_difference(si, d, 0.05), 1e-6) << d;
  }
  const Jet product = inner * inner;
  EXPECT_NEAR(product[0], 0.09, 1e-15);
  EXPECT_NEAR(product[1], 0.42, 1e-15);
  EXPECT_NEAR(product[2], 0.49 + 0.12, 1e-15);
}

TEST(JetMatrix, ConstantTermOfProduct) {
  std::mt19937_64 rng(8);
  const Matrix2c a = random_matrix(rng), b = random_matrix(rng);
  const auto pa = JetMatrix::combine(Jet::linear(3, 1.0, 0.5), Jet::linear(3, 0.0, 2.0), a);
  const auto pb = JetMatrix::constant(3, b);
  const auto prod = pa * pb;
  EXPECT_LT(max_diff(prod[0], b), 1e-15);
  EXPECT_LT(max_diff(prod[1], (0.5 * Matrix2c::identity() + 2.0 * a) * b), 1e-14);
  EXPECT_LT(max_diff(prod[2], Matrix2c::zero()), 1e-15);
}

TEST(GnMultipoly, MatchesJetOnIndicatorSignals) {
  const int grid = 3, d = 2;
  for (int n = 0; n < grid; ++n) {
    const auto poly = g_n_multipoly(grid, n, d).homogeneous_part(d);
    for (int i = 0; i < grid; ++i) {
      Exponent square(grid, 0);
      square[i] = 2;
      EXPECT_LT(max_diff(poly.coefficient(square), d_jet(indicator(grid, {i}), n, d)), 1e-14);
      for (int j = i + 1; j < grid; ++j) {
        Exponent mixed(grid, 0);
        mixed[i] = mixed[j] = 1;
        const Matrix2c via_jet = d_jet(indicator(grid, {i, j}), n, d) - d_jet(indicator(grid, {i}), n, d) -
                                 d_jet(indicator(grid, {j}), n, d);
        EXPECT_LT(max_diff(poly.coefficient(mixed), via_jet), 1e-14);
      }
    }
  }
}

TEST(GnMultipoly, StructuralForm) {
  for (int grid : {2, 3, 4}) {
    for (int d = 1; d <= 4; ++d) {
      for (int n = 0; n < grid; ++n) {
        const auto poly = g_n_multipoly(grid, n, d).homogeneous_part(d);
        std::size_t expected_terms = 0;
        for_each_composition(static_cast<std::size_t>(grid), d, [&](const MultiIndex& k) {
          ++expected_terms;
          double weight = factorial(d) * std::pow(static_cast<double>(grid), -d);
          for (int kj : k.counts()) weight /= factorial(kj);
          const Matrix2c expected = weight * (e_delta(-2 * alt(k), n, grid) * j_power(d));
          const Exponent e(k.counts().begin(), k.counts().end());
          EXPECT_LT(max_diff(poly.coefficient(e), expected), 1e-13);
        });
        EXPECT_EQ(poly.term_count(), expected_terms);
      }
    }
  }
}

TEST(GnMultipoly, ConstantPartAndBudget) {
  const auto poly = g_n_multipoly(4, 1, 0);
  EXPECT_EQ(poly.term_count(), 1u);
  EXPECT_LT(max_diff(poly.coefficient(Exponent(4, 0)), Matrix2c::identity()), 1e-15);
  EXPECT_THROW(g_n_multipoly(40, 0, 12), std::length_error);
  EXPECT_EQ(monomial_budget(3, 2), 10u);
}

TEST(GnTaylor, EvaluatesToProduct) {
  const std::vector<double> u{0.05, -0.03, 0.02};
  for (int n = 0; n < 3; ++n) {
    const auto taylor = g_n_taylor(3, n, 8);
    Matrix2c sum = Matrix2c::zero();
    for (const auto& [k, m] : taylor.terms()) {
      double mono = 1.0;
      for (std::size_t j = 0; j < k.size(); ++j) mono *= std::pow(u[j], k[j]);
      sum += mono * m;
    }
    EXPECT_LT(max_diff(sum, g_n(Signal::real(u), n)), 1e-14);
  }
}

TEST(MixedPartials, BoxEqualsSphereOnHomogeneousPart) {
  for (int grid = 1; grid <= 4; ++grid) {
    for (int d = 1; d <= 3; ++d) {
      for (int n = 0; n < grid; ++n) {
        const auto poly = g_n_multipoly(grid, n, d).homogeneous_part(d);
        EXPECT_LT(max_diff(mixed_partials_at_zero(poly, d, PartialsRange::box),
                           mixed_partials_at_zero(poly, d, PartialsRange::sphere)),
                  1e-14);
      }
    }
  }
}

TEST(ExtractAp, ExamplesAndEnumeration) {
  EXPECT_EQ(extract_ap(3, 0, 2), 3);
  for (int grid = 1; grid <= 6; ++grid) {
    for (int d = 1; d <= 4; ++d) {
      for (int l = 0; l < grid; ++l) {
        const auto detail = extract_ap_detail(grid, l, d);
        EXPECT_LT(detail.residue, 1e-6);
        EXPECT_EQ(detail.value, ap_brute(grid, l, d)) << grid << ' ' << l << ' ' << d;
        EXPECT_EQ(detail.value, ap_via_alt(grid, l, d));
      }
    }
  }
}

TEST(ExtractAp, WholeTable) {
  const auto all = extract_ap_all(7, 4);
  for (int l = 0; l < 7; ++l) EXPECT_EQ(all[l].value, ap_brute(7, l, 4));
}

TEST(PAlt, SingleDraw) {
  const std::vector<double> u{0.1, 0.6, 0.3};
  for (int l = 0; l < 3; ++l) EXPECT_NEAR(p_alt(u, 1, l), u[l], 1e-14);
}

TEST(PAlt, ConcentratedMass) {
  const std::vector<double> u{1.0, 0.0, 0.0, 0.0};
  for (int d = 1; d <= 4; ++d) {
    EXPECT_NEAR(p_alt_direct(u, d, 0), 1.0, 1e-15);
    for (int l = 1; l < 4; ++l) EXPECT_EQ(p_alt_direct(u, d, l), 0.0);
  }
}

TEST(PAlt, TwoStatesTwoDraws) {
  const double q = 0.35;
  const std::vector<double> u{q, 1 - q};
  // (0,0), (1,1) have alternating sum 0; the mixed draw (1,0) has 1.
  EXPECT_NEAR(p_alt_direct(u, 2, 0), q * q + (1 - q) * (1 - q), 1e-15);
  EXPECT_NEAR(p_alt_direct(u, 2, 1), 2 * q * (1 - q), 1e-15);
  EXPECT_NEAR(p_alt(u, 2, 0), q * q + (1 - q) * (1 - q), 1e-12);
  EXPECT_NEAR(p_alt(u, 2, 1), 2 * q * (1 - q), 1e-12);
}

TEST(PAlt, UniformMatchesCounting) {
  const std::vector<double> u(4, 0.25);
  for (int l = 0; l < 4; ++l) {
    double expected = 0.0;
    for_each_composition(4, 3, [&](const MultiIndex& k) {
      if (alt(k) == l) expected += multinomial_mass(u, k);
    });
    EXPECT_NEAR(p_alt(u, 3, l), expected, 1e-10);
  }
}

TEST(PAlt, RandomSimplexPoints) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> grid_dist(1, 5), degree_dist(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto grid = static_cast<std::size_t>(grid_dist(rng));
    const int d = degree_dist(rng);
    const auto u = oracle::random_simplex_point(rng, grid);
    double total = 0.0;
    for (int l = 0; l < static_cast<int>(grid); ++l) {
      const double transform = p_alt(u, d, l);
      EXPECT_NEAR(transform, p_alt_direct(u, d, l), 1e-10);
      total += transform;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(PAlt, ReversedLabels) {
  // j -> N-1-j keeps alt for even d and sends it to N-1-alt for odd d.
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t grid = 2 + trial % 4;
    const int d = 1 + trial % 5;
    const auto u = oracle::random_simplex_point(rng, grid);
    const std::vector<double> reversed(u.rbegin(), u.rend());
    for (int l = 0; l < static_cast<int>(grid); ++l) {
      const int image = d % 2 == 0 ? l : static_cast<int>(grid) - 1 - l;
      EXPECT_NEAR(p_alt_direct(u, d, l), p_alt_direct(reversed, d, image), 1e-14);
    }
  }
}

TEST(PAlt, RejectsOffSimplex) {
  const std::vector<double> u{0.5, 0.6};
  EXPECT_THROW(p_alt(u, 2, 0), std::domain_error);
  EXPECT_THROW(p_alt_direct(u, 2, 0), std::domain_error);
}
