#include "nlft/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "nlft/jet.hpp"
#include "nlft/transforms.hpp"

namespace nlft {
namespace {

constexpr double kScalarTolerance = 1e-9;
constexpr double kRoundingTolerance = 1e-6;
constexpr std::size_t kTermBudget = 1'000'000;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double exponent_factorial(const Exponent& k) {
  double f = 1.0;
  for (int kj : k) f *= factorial(kj);
  return f;
}

void check_simplex(std::span<const double> u) {
  if (u.empty()) throw std::invalid_argument("simplex point has no coordinates");
  double sum = 0.0;
  for (double v : u) {
    if (!(v >= 0.0)) throw std::domain_error("simplex point has a negative coordinate");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::domain_error("simplex point does not sum to 1");
}

ExtractedCount round_count(Complex raw) {
  ExtractedCount out;
  out.raw = raw.real();
  const double nearest = std::round(raw.real());
  out.residue = std::abs(raw.real() - nearest) + std::abs(raw.imag());
  out.value = BigInt(static_cast<long long>(nearest));
  return out;
}

BigInt checked(const ExtractedCount& c, const char* what, int grid, int shift, int parts) {
  if (!(c.residue < kRoundingTolerance)) {
    throw std::runtime_error(std::string(what) + ": rounding residue " + std::to_string(c.residue) +
                             " at (N, l, d) = (" + std::to_string(grid) + ", " +
                             std::to_string(shift) + ", " + std::to_string(parts) + ")");
  }
  return c.value;
}

}  // namespace

Matrix2c idft_matrix(const SpectralSequence& seq, long long shift) {
  if (!seq.covers_discrete_grid()) {
    throw std::invalid_argument("idft_matrix: sequence must cover n = 0..N-1");
  }
  Matrix2c sum = Matrix2c::zero();
  for (long long n = 0; n < seq.grid_size; ++n) {
    sum += e_delta(2 * shift, n, seq.grid_size) * seq.values[static_cast<std::size_t>(n)];
  }
  return (1.0 / static_cast<double>(seq.grid_size)) * sum;
}

Complex unscale_coefficient(const SpectralSequence& seq, long long shift, int degree) {
  const Matrix2c adjusted = std::pow(static_cast<double>(seq.grid_size), degree) *
                            (idft_matrix(seq, shift) * j_power(-degree));
  double input = 0.0;
  for (const auto& m : seq.values) input = std::max(input, m.max_norm());
  const double scale = std::max({1.0, std::abs(adjusted.a11()),
                                 std::pow(static_cast<double>(seq.grid_size), degree) * input});
  const double off = std::max({std::abs(adjusted.a12()), std::abs(adjusted.a21()),
                               std::abs(adjusted.a11() - adjusted.a22())});
  if (off > kScalarTolerance * scale) {
    throw std::runtime_error("unscale_coefficient: coefficient is not a multiple of J^d (" +
                             std::to_string(off) + ")");
  }
  return adjusted.a11();
}

UniPolyMatrix f_n_poly(int grid_size, long long n, int cap) {
  if (grid_size < 1) throw std::invalid_argument("f_n_poly: N must be >= 1");
  if (cap < 0 || cap > grid_size) throw std::invalid_argument("f_n_poly: need 0 <= cap <= N");
  if (n < 0 || n >= grid_size) throw std::out_of_range("f_n_poly: spectral index out of range");
  UniPolyMatrix poly(static_cast<std::size_t>(cap) + 1, Matrix2c::zero());
  poly[0] = Matrix2c::identity();
  const double inv_n = 1.0 / grid_size;
  for (long long k = grid_size - 1; k >= 0; --k) {
    const Matrix2c step = inv_n * (e_delta(-2 * k, n, grid_size) * j_power(1));
    for (int j = cap; j >= 1; --j) poly[j] += poly[j - 1] * step;
  }
  return poly;
}

Matrix2c evaluate(const UniPolyMatrix& poly, double u) {
  Matrix2c acc = Matrix2c::zero();
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = u * acc + *it;
  return acc;
}

static SpectralSequence aq_sequence(int grid_size, int parts) {
  if (parts < 1 || parts > grid_size) throw std::invalid_argument("extract_aq: need 1 <= d <= N");
  SpectralSequence coeffs{grid_size, 0, {}};
  coeffs.values.reserve(static_cast<std::size_t>(grid_size));
  for (long long n = 0; n < grid_size; ++n) {
    coeffs.values.push_back(f_n_poly(grid_size, n, parts)[static_cast<std::size_t>(parts)]);
  }
  return coeffs;
}

ExtractedCount extract_aq_detail(int grid_size, int shift, int parts) {
  const SpectralSequence coeffs = aq_sequence(grid_size, parts);
  if (shift < 0 || shift >= grid_size) throw std::out_of_range("extract_aq: l outside 0..N-1");
  return round_count(unscale_coefficient(coeffs, shift, parts));
}

std::vector<ExtractedCount> extract_aq_all(int grid_size, int parts) {
  const SpectralSequence coeffs = aq_sequence(grid_size, parts);
  std::vector<ExtractedCount> out;
  for (int l = 0; l < grid_size; ++l) out.push_back(round_count(unscale_coefficient(coeffs, l, parts)));
  return out;
}

BigInt extract_aq(int grid_size, int shift, int parts) {
  return checked(extract_aq_detail(grid_size, shift, parts), "extract_aq", grid_size, shift, parts);
}

Matrix2c d_jet(const Signal& u, long long n, int degree) {
  const auto samples = u.real_samples();
  const auto grid = static_cast<long long>(samples.size());
  if (n < 0 || n >= grid) throw std::out_of_range("d_jet: spectral index out of range");
  if (degree < 0) throw std::invalid_argument("d_jet: negative degree");
  JetMatrix product = JetMatrix::constant(degree, Matrix2c::identity());
  for (long long l = grid - 1; l >= 0; --l) {
    const auto angle = Jet::linear(degree, 0.0, samples[static_cast<std::size_t>(l)] / grid);
    const auto [c, s] = cos_sin(angle);
    product = product * JetMatrix::combine(c, s, e_delta(-2 * l, n, grid) * j_power(1));
  }
  return factorial(degree) * product[degree];
}

MultiPolyMatrix g_n_taylor(int grid_size, long long n, int cap) {
  if (grid_size < 1) throw std::invalid_argument("g_n_taylor: N must be >= 1");
  if (n < 0 || n >= grid_size) throw std::out_of_range("g_n_taylor: spectral index out of range");
  const auto vars = static_cast<std::size_t>(grid_size);
  if (monomial_budget(vars, cap) > kTermBudget) {
    throw std::length_error("g_n_taylor: C(N + d, d) exceeds the 10^6 term budget");
  }
  MultiPolyMatrix product = MultiPolyMatrix::constant(vars, cap, Matrix2c::identity());
  for (long long l = grid_size - 1; l >= 0; --l) {
    // cos(u/N) I + sin(u/N) E J expanded in u_l
    const Matrix2c rotated = e_delta(-2 * l, n, grid_size) * j_power(1);
    MultiPolyMatrix factor(vars, cap);
    Exponent k(vars, 0);
    double coeff = 1.0;
    for (int power = 0; power <= cap; ++power) {
      if (power > 0) coeff *= 1.0 / (static_cast<double>(grid_size) * power);
      const double sign = ((power / 2) % 2 == 0) ? 1.0 : -1.0;
      k[static_cast<std::size_t>(l)] = power;
      factor.add_term(k, (sign * coeff) * (power % 2 == 0 ? Matrix2c::identity() : rotated));
    }
    product = product * factor;
  }
  return product;
}

MultiPolyMatrix g_n_multipoly(int grid_size, long long n, int cap) {
  const MultiPolyMatrix taylor = g_n_taylor(grid_size, n, cap);
  MultiPolyMatrix weighted(taylor.n_vars(), cap);
  for (const auto& [k, m] : taylor.terms()) {
    weighted.add_term(k, factorial(std::accumulate(k.begin(), k.end(), 0)) * m);
  }
  return weighted;
}

Matrix2c mixed_partials_at_zero(const MultiPolyMatrix& poly, int degree, PartialsRange range) {
  Matrix2c sum = Matrix2c::zero();
  for (const auto& [k, m] : poly.terms()) {
    bool included = true;
    if (range == PartialsRange::sphere) {
      included = std::accumulate(k.begin(), k.end(), 0) == degree;
    } else {
      for (int kj : k) included = included && kj <= degree;
    }
    if (included) sum += exponent_factorial(k) * m;
  }
  return sum;
}

static SpectralSequence ap_sequence(int grid_size, int parts) {
  if (grid_size < 1 || parts < 1) throw std::invalid_argument("extract_ap: need N, d >= 1");
  SpectralSequence contracted{grid_size, 0, {}};
  for (long long n = 0; n < grid_size; ++n) {
    const auto derivative = g_n_multipoly(grid_size, n, parts).homogeneous_part(parts);
    contracted.values.push_back(mixed_partials_at_zero(derivative, parts, PartialsRange::sphere));
  }
  return contracted;
}

ExtractedCount extract_ap_detail(int grid_size, int shift, int parts) {
  if (shift < 0 || shift >= grid_size) throw std::out_of_range("extract_ap: l outside 0..N-1");
  const SpectralSequence contracted = ap_sequence(grid_size, parts);
  return round_count(unscale_coefficient(contracted, shift, parts) / factorial(parts));
}

std::vector<ExtractedCount> extract_ap_all(int grid_size, int parts) {
  const SpectralSequence contracted = ap_sequence(grid_size, parts);
  std::vector<ExtractedCount> out;
  for (int l = 0; l < grid_size; ++l) {
    out.push_back(round_count(unscale_coefficient(contracted, l, parts) / factorial(parts)));
  }
  return out;
}

BigInt extract_ap(int grid_size, int shift, int parts) {
  return checked(extract_ap_detail(grid_size, shift, parts), "extract_ap", grid_size, shift, parts);
}

double multinomial_mass(std::span<const double> u, const MultiIndex& k) {
  if (k.size() != u.size()) throw std::invalid_argument("multinomial_mass: size mismatch");
  double mass = factorial(static_cast<int>(k.norm1()));
  for (std::size_t j = 0; j < u.size(); ++j) {
    mass *= std::pow(u[j], k[j]) / factorial(k[j]);
  }
  return mass;
}

double p_alt(std::span<const double> u, int degree, int shift) {
  check_simplex(u);
  const auto grid = static_cast<long long>(u.size());
  if (degree < 1) throw std::invalid_argument("p_alt: degree must be >= 1");
  if (shift < 0 || shift >= grid) throw std::out_of_range("p_alt: l outside 0..N-1");
  const Signal signal = Signal::real(std::vector<double>(u.begin(), u.end()));
  SpectralSequence derivatives{grid, 0, {}};
  for (long long n = 0; n < grid; ++n) derivatives.values.push_back(d_jet(signal, n, degree));
  return unscale_coefficient(derivatives, shift, degree).real();
}

double p_alt_direct(std::span<const double> u, int degree, int shift) {
  check_simplex(u);
  if (degree < 1) throw std::invalid_argument("p_alt_direct: degree must be >= 1");
  if (shift < 0 || shift >= static_cast<int>(u.size())) {
    throw std::out_of_range("p_alt_direct: l outside 0..N-1");
  }
  double total = 0.0;
  for_each_composition(u.size(), degree, [&](const MultiIndex& k) {
    if (alt(k) == shift) total += multinomial_mass(u, k);
  });
  return total;
}

}  // namespace nlft
