#ifndef NLFT_DISTRIBUTIONS_HPP
#define NLFT_DISTRIBUTIONS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace nlft {

/// Beta shape in the usual convention: density proportional to
/// x^{alpha-1} (1-x)^{beta-1}.
class BetaShape {
 public:
  /// Throws std::invalid_argument unless alpha, beta > 0.
  BetaShape(double alpha, double beta);

  /// Shape for the density x^a (1-x)^b / B(a+1, b+1), i.e. (a+1, b+1).
  static BetaShape from_exponents(int a, int b);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

/// Euler beta function. Integer arguments up to 20 use factorials.
double beta_fn(double a, double b);

/// Beta density at x in [0, 1] with 0^0 = 1.
double beta_pdf(double x, const BetaShape& shape);

/// Shape of the fiber-volume density for d parts: (d/2, d/2+1) for even d,
/// ((d+1)/2, (d+1)/2) for odd d.
BetaShape fiber_shape(int parts);

/// Volume of the (d-1)-dimensional slice of the ordered unit simplex on which
/// the alternating coordinate sum equals l, projected along x_d:
/// beta_pdf(l, fiber_shape(d)) / d!.
double vol_formula(int parts, double l);

struct VolumeEstimate {
  double estimate = 0.0;   ///< Vol(D_d(l)) estimate
  double standard_error = 0.0;  ///< binomial standard error of the estimate
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

/// Monte Carlo estimate of vol_formula(d, center): samples sorted uniforms
/// on the ordered simplex, histograms the alternating sum into
/// [center - width/2, center + width/2) and divides the density by d!.
/// Requires d >= 2 and samples >= 10^4; throws std::domain_error on an
/// empty bin.
VolumeEstimate vol_mc(int parts, double bin_center, double bin_width,
                      std::uint64_t samples, std::uint64_t seed);

/// Unnormalized discrete beta value
/// Q_N(l/N; a, b) = (a+b+1)!/N^{a+b} C(l-1, a) C(N-l, b).
double discrete_beta_unnormalized(int grid_size, int shift, int a, int b);

/// Normalizer c(N) = 1 / ((1/N) sum_l Q_N(l/N; a, b)). Requires N > a + b.
double c_norm(int grid_size, int a, int b);

/// Discrete beta distribution on {0, 1/N, ..., (N-1)/N}.
class DiscreteBetaSpec {
 public:
  DiscreteBetaSpec(int grid_size, int a, int b);

  int grid_size() const { return grid_size_; }
  int a() const { return a_; }
  int b() const { return b_; }
  double normalizer() const { return normalizer_; }

 private:
  int grid_size_;
  int a_;
  int b_;
  double normalizer_;
};

/// Density value P_N(l/N; a, b) = c(N) Q_N(l/N; a, b); the point mass of l is
/// this value divided by N.
double discrete_beta_pmf(const DiscreteBetaSpec& spec, int shift);

/// round(lambda N) clamped to 0..N-1.
int lattice_index(double lambda, int grid_size);

struct BetaConvergenceRow {
  int grid_size;
  int shift;                ///< l_N
  double discrete;          ///< P_N(l_N / N)
  double continuous;        ///< p_beta(l_N / N)
  double continuous_at_lambda;
  double abs_err;           ///< |discrete - continuous|
  double abs_err_lambda;    ///< |discrete - continuous_at_lambda|
  double normalizer;        ///< c(N)
};

/// Discrete beta against the continuous density with shape (a+1, b+1).
std::vector<BetaConvergenceRow> convergence_table(int a, int b, double lambda,
                                                  std::span<const int> grid_sizes);

struct AqLimitRow {
  int grid_size;
  int shift;
  double scaled_aq;       ///< d!/N^{d-1} AQ_N(l_N, d)
  double density_target;  ///< p_beta(lambda; fiber_shape(d))
  double abs_err;
  double volume_estimate;  ///< AQ_N(l_N, d) / N^{d-1}
  double volume_target;    ///< vol_formula(d, lambda)
  double volume_err;
};

std::vector<AqLimitRow> aq_beta_limit_check(int parts, double lambda,
                                            std::span<const int> grid_sizes);

}  // namespace nlft

#endif  // NLFT_DISTRIBUTIONS_HPP
