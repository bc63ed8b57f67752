#include "nlft/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "nlft/distributions.hpp"

namespace nlft {
namespace {

double sign_power(long long n) { return (n % 2 == 0) ? 1.0 : -1.0; }

void check_spectral_index(long long n, std::size_t grid_size) {
  if (n < 0 || n >= static_cast<long long>(grid_size)) {
    throw std::out_of_range("spectral index " + std::to_string(n) +
                            " outside 0.." + std::to_string(grid_size - 1));
  }
}

// Gauged coefficient matrix [[0, e^{-2 pi i n x} u], [-e^{2 pi i n x} conj(u), 0]].
Matrix2c gauged_coefficient(double x, long long n, Complex u) {
  const Complex phase = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(n) * x);
  return {0.0, phase * u, -std::conj(phase) * std::conj(u), 0.0};
}

}  // namespace

Matrix2c nlft_constant(double u, long long n) {
  const Complex spectral(0.0, std::numbers::pi * static_cast<double>(n));
  return sign_power(n) * exp_traceless({spectral, u, -u, -spectral});
}

Matrix2c nlft_step(const Signal& u, long long n) {
  const double inv_n = 1.0 / static_cast<double>(u.size());
  const Complex spectral(0.0, std::numbers::pi * static_cast<double>(n) * inv_n);
  Matrix2c product = Matrix2c::identity();
  for (std::size_t l = u.size(); l-- > 0;) {
    const Complex ul = u[l] * inv_n;
    product = product * exp_traceless({spectral, ul, -std::conj(ul), -spectral});
  }
  return sign_power(n) * product;
}

std::vector<Matrix2c> nlft_dyson_terms(const Signal& u, long long n, int max_order,
                                       int quad_points) {
  if (max_order < 0) throw std::invalid_argument("nlft_dyson: negative order");
  if (quad_points < 2) throw std::invalid_argument("nlft_dyson: need at least 2 nodes");

  const auto m = static_cast<std::size_t>(quad_points);
  const double h = 1.0 / static_cast<double>(m - 1);
  const auto steps = static_cast<double>(u.size());

  std::vector<Matrix2c> coeff(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double x = static_cast<double>(j) * h;
    const auto l = std::min(u.size() - 1, static_cast<std::size_t>(x * steps));
    coeff[j] = gauged_coefficient(x, n, u[l]);
  }

  std::vector<Matrix2c> terms{Matrix2c::identity()};
  std::vector<Matrix2c> previous(m, Matrix2c::identity());
  std::vector<Matrix2c> current(m);
  std::vector<Matrix2c> integrand(m);
  for (int order = 1; order <= max_order; ++order) {
    for (std::size_t j = 0; j < m; ++j) integrand[j] = coeff[j] * previous[j];
    current[0] = Matrix2c::zero();
    for (std::size_t j = 1; j < m; ++j) {
      current[j] = current[j - 1] + (0.5 * h) * (integrand[j - 1] + integrand[j]);
    }
    terms.push_back(current[m - 1]);
    std::swap(previous, current);
  }
  return terms;
}

Matrix2c nlft_dyson(const Signal& u, long long n, int max_order, int quad_points) {
  Matrix2c sum = Matrix2c::zero();
  for (const auto& term : nlft_dyson_terms(u, n, max_order, quad_points)) sum += term;
  return sum;
}

Matrix2c nlft_volume_term(double u, long long n, int order, int panels) {
  if (order < 1) throw std::invalid_argument("nlft_volume_term: order must be >= 1");
  if (panels < 2 || panels % 2 != 0) {
    throw std::invalid_argument("nlft_volume_term: Simpson needs an even panel count");
  }
  const double h = 1.0 / panels;
  Matrix2c integral = Matrix2c::zero();
  for (int j = 0; j <= panels; ++j) {
    const double l = j * h;
    const double weight = (j == 0 || j == panels) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    integral += (weight * vol_formula(order, l)) * e_matrix(-2.0 * l, static_cast<double>(n));
  }
  integral *= Complex(h / 3.0 * std::pow(u, order));
  return integral * j_power(order);
}

Matrix2c nlft_volume_expansion(double u, long long n, int max_order, int panels) {
  if (max_order < 1) throw std::invalid_argument("nlft_volume_expansion: order must be >= 1");
  Matrix2c sum = Matrix2c::identity();
  for (int d = 1; d <= max_order; ++d) sum += nlft_volume_term(u, n, d, panels);
  return sum;
}

Matrix2c f_n(const Signal& u, long long n) {
  const auto grid = static_cast<long long>(u.size());
  check_spectral_index(n, u.size());
  const double inv_n = 1.0 / static_cast<double>(grid);
  Matrix2c product = Matrix2c::identity();
  for (long long k = grid - 1; k >= 0; --k) {
    const Complex uk = u[static_cast<std::size_t>(k)] * inv_n;
    const Complex phase = e_delta(-2 * k, n, grid).a11();
    product = product * Matrix2c{1.0, phase * uk, -std::conj(phase) * std::conj(uk), 1.0};
  }
  return product;
}

Matrix2c g_n(const Signal& u, long long n) {
  const auto samples = u.real_samples();
  const auto grid = static_cast<long long>(samples.size());
  check_spectral_index(n, samples.size());
  Matrix2c product = Matrix2c::identity();
  for (long long l = grid - 1; l >= 0; --l) {
    const double theta = samples[static_cast<std::size_t>(l)] / static_cast<double>(grid);
    const Matrix2c factor = std::cos(theta) * Matrix2c::identity() +
                            std::sin(theta) * (e_delta(-2 * l, n, grid) * j_power(1));
    product = product * factor;
  }
  return product;
}

Matrix2c g_n_split_form(const Signal& u, long long n) {
  const auto samples = u.real_samples();
  const auto grid = static_cast<long long>(samples.size());
  check_spectral_index(n, samples.size());
  const Matrix2c phase = e_delta(1, n, grid);
  Matrix2c product = Matrix2c::identity();
  for (long long l = grid - 1; l >= 0; --l) {
    product = product * phase *
              rotation(samples[static_cast<std::size_t>(l)] / static_cast<double>(grid));
  }
  return product;
}

double tan_relation_factor(const Signal& u) {
  const auto samples = u.real_samples();
  const auto grid = static_cast<double>(samples.size());
  double factor = 1.0;
  for (double v : samples) factor *= std::cos(v / grid);
  return factor;
}

Signal tan_scaled_signal(const Signal& u) {
  auto samples = u.real_samples();
  const auto grid = static_cast<double>(samples.size());
  for (double& v : samples) v = grid * std::tan(v / grid);
  return Signal::real(std::move(samples));
}

std::string_view to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::discrete_euler: return "F_N";
    case TransformKind::discrete_splitting: return "G_N";
    case TransformKind::step: return "step";
  }
  return "unknown";
}

SpectralSequence spectral_table(TransformKind kind, const Signal& u) {
  const auto grid = static_cast<long long>(u.size());
  SpectralSequence table{grid, 0, std::vector<Matrix2c>(u.size())};

  auto evaluate = [&](long long n) {
    switch (kind) {
      case TransformKind::discrete_euler: return f_n(u, n);
      case TransformKind::discrete_splitting: return g_n(u, n);
      case TransformKind::step: return nlft_step(u, n);
    }
    throw std::invalid_argument("spectral_table: unknown transform kind");
  };
  if (kind == TransformKind::discrete_splitting) (void)u.real_samples();

  const unsigned workers = std::clamp(std::thread::hardware_concurrency(), 1u, 16u);
  if (workers == 1 || grid < 256) {
    for (long long n = 0; n < grid; ++n) table.values[static_cast<std::size_t>(n)] = evaluate(n);
    return table;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (long long n = w; n < grid; n += workers) {
        table.values[static_cast<std::size_t>(n)] = evaluate(n);
      }
    });
  }
  pool.clear();
  return table;
}

}  // namespace nlft
