#include "nlft/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "nlft/partitions.hpp"
#include "nlft/rng.hpp"

namespace nlft {
namespace {

bool is_small_integer(double x) { return x == std::floor(x) && x >= 1.0 && x <= 20.0; }

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial_real(long long top, long long bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return 0.0;
  double result = 1.0;
  for (long long i = 1; i <= bottom; ++i) {
    result *= static_cast<double>(top - bottom + i) / static_cast<double>(i);
  }
  return result;
}

constexpr std::uint64_t kMonteCarloStreams = 8;

}  // namespace

BetaShape::BetaShape(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::invalid_argument("BetaShape: parameters must be positive");
  }
}

BetaShape BetaShape::from_exponents(int a, int b) { return {a + 1.0, b + 1.0}; }

double beta_fn(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("beta_fn: arguments must be positive");
  if (is_small_integer(a) && is_small_integer(b)) {
    const int ia = static_cast<int>(a);
    const int ib = static_cast<int>(b);
    // (a-1)!(b-1)!/(a+b-1)! as a product to stay exact-ish in double
    const int lo = std::min(ia, ib);
    const int hi = std::max(ia, ib);
    double value = 1.0 / hi;
    for (int i = 1; i < lo; ++i) value *= static_cast<double>(i) / static_cast<double>(hi + i);
    return value;
  }
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double beta_pdf(double x, const BetaShape& shape) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("beta_pdf: x outside [0, 1]");
  return std::pow(x, shape.alpha() - 1.0) * std::pow(1.0 - x, shape.beta() - 1.0) /
         beta_fn(shape.alpha(), shape.beta());
}

BetaShape fiber_shape(int parts) {
  if (parts < 1) throw std::invalid_argument("fiber_shape: d must be >= 1");
  if (parts % 2 == 0) return {parts / 2.0, parts / 2.0 + 1.0};
  return {(parts + 1) / 2.0, (parts + 1) / 2.0};
}

double vol_formula(int parts, double l) {
  return beta_pdf(l, fiber_shape(parts)) / factorial(parts);
}

VolumeEstimate vol_mc(int parts, double bin_center, double bin_width, std::uint64_t samples,
                      std::uint64_t seed) {
  if (parts < 2) throw std::invalid_argument("vol_mc: d = 1 is degenerate (density 1)");
  if (samples < 10000) throw std::invalid_argument("vol_mc: need at least 10^4 samples");
  if (!(bin_width > 0.0)) throw std::invalid_argument("vol_mc: bin width must be positive");
  const double lo = bin_center - 0.5 * bin_width;
  const double hi = bin_center + 0.5 * bin_width;

  const CounterRng root(seed);
  std::vector<std::uint64_t> hits(kMonteCarloStreams, 0);
  auto run_stream = [&](std::uint64_t stream) {
    CounterRng rng = root.split(stream);
    const std::uint64_t begin = samples * stream / kMonteCarloStreams;
    const std::uint64_t end = samples * (stream + 1) / kMonteCarloStreams;
    std::vector<double> x(static_cast<std::size_t>(parts));
    std::uint64_t count = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      for (double& v : x) v = rng.uniform();
      std::sort(x.begin(), x.end(), std::greater<>());
      double s = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) s += (j % 2 == 0) ? x[j] : -x[j];
      if (s >= lo && s < hi) ++count;
    }
    hits[stream] = count;
  };

  const auto workers = std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1,
                                                 kMonteCarloStreams);
  if (workers == 1) {
    for (std::uint64_t s = 0; s < kMonteCarloStreams; ++s) run_stream(s);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t s = w; s < kMonteCarloStreams; s += workers) run_stream(s);
      });
    }
  }

  VolumeEstimate result;
  result.samples = samples;
  for (auto h : hits) result.hits += h;
  if (result.hits == 0) throw std::domain_error("vol_mc: empty bin");
  const double p = static_cast<double>(result.hits) / static_cast<double>(samples);
  const double scale = bin_width * factorial(parts);
  result.estimate = p / scale;
  result.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples)) / scale;
  return result;
}

double discrete_beta_unnormalized(int grid_size, int shift, int a, int b) {
  if (grid_size < 1) throw std::invalid_argument("discrete beta: N must be >= 1");
  if (a < 0 || b < 0) throw std::invalid_argument("discrete beta: a, b must be >= 0");
  if (shift < 0 || shift >= grid_size) {
    throw std::out_of_range("discrete beta: l = " + std::to_string(shift) + " outside 0..N-1");
  }
  return factorial(a + b + 1) / std::pow(static_cast<double>(grid_size), a + b) *
         binomial_real(shift - 1, a) * binomial_real(grid_size - shift, b);
}

double c_norm(int grid_size, int a, int b) {
  if (grid_size <= a + b) {
    throw std::invalid_argument("c_norm: need N > a + b");
  }
  double mass = 0.0;
  for (int l = 0; l < grid_size; ++l) mass += discrete_beta_unnormalized(grid_size, l, a, b);
  mass /= grid_size;
  if (!(mass > 0.0)) throw std::domain_error("c_norm: zero total mass");
  return 1.0 / mass;
}

DiscreteBetaSpec::DiscreteBetaSpec(int grid_size, int a, int b)
    : grid_size_(grid_size), a_(a), b_(b), normalizer_(c_norm(grid_size, a, b)) {}

double discrete_beta_pmf(const DiscreteBetaSpec& spec, int shift) {
  return spec.normalizer() * discrete_beta_unnormalized(spec.grid_size(), shift, spec.a(), spec.b());
}

int lattice_index(double lambda, int grid_size) {
  const auto l = static_cast<long long>(std::llround(lambda * grid_size));
  return static_cast<int>(std::clamp<long long>(l, 0, grid_size - 1));
}

std::vector<BetaConvergenceRow> convergence_table(int a, int b, double lambda,
                                                  std::span<const int> grid_sizes) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::domain_error("lambda outside [0, 1]");
  const auto shape = BetaShape::from_exponents(a, b);
  std::vector<BetaConvergenceRow> rows;
  for (int grid : grid_sizes) {
    const DiscreteBetaSpec spec(grid, a, b);
    const int l = lattice_index(lambda, grid);
    BetaConvergenceRow row{};
    row.grid_size = grid;
    row.shift = l;
    row.discrete = discrete_beta_pmf(spec, l);
    row.continuous = beta_pdf(static_cast<double>(l) / grid, shape);
    row.continuous_at_lambda = beta_pdf(lambda, shape);
    row.abs_err = std::abs(row.discrete - row.continuous);
    row.abs_err_lambda = std::abs(row.discrete - row.continuous_at_lambda);
    row.normalizer = spec.normalizer();
    rows.push_back(row);
  }
  return rows;
}

std::vector<AqLimitRow> aq_beta_limit_check(int parts, double lambda,
                                            std::span<const int> grid_sizes) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::domain_error("lambda outside [0, 1]");
  std::vector<AqLimitRow> rows;
  for (int grid : grid_sizes) {
    if (grid < parts) throw std::invalid_argument("aq_beta_limit_check: need N >= d");
    const int l = lattice_index(lambda, grid);
    const double count = aq_closed(grid, l, parts).convert_to<double>();
    const double scale = std::pow(static_cast<double>(grid), parts - 1);
    AqLimitRow row{};
    row.grid_size = grid;
    row.shift = l;
    row.volume_estimate = count / scale;
    row.volume_target = vol_formula(parts, lambda);
    row.volume_err = std::abs(row.volume_estimate - row.volume_target);
    row.scaled_aq = factorial(parts) * row.volume_estimate;
    row.density_target = beta_pdf(lambda, fiber_shape(parts));
    row.abs_err = std::abs(row.scaled_aq - row.density_target);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nlft
