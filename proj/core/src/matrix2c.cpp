#include "nlft/matrix2c.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace nlft {

double Matrix2c::max_norm() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

Matrix2c& Matrix2c::operator+=(const Matrix2c& rhs) {
  for (std::size_t i = 0; i < 4; ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Matrix2c& Matrix2c::operator-=(const Matrix2c& rhs) {
  for (std::size_t i = 0; i < 4; ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Matrix2c& Matrix2c::operator*=(Complex s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

double max_diff(const Matrix2c& a, const Matrix2c& b) { return (a - b).max_norm(); }

std::ostream& operator<<(std::ostream& os, const Matrix2c& m) {
  return os << "[[" << m.a11() << ", " << m.a12() << "], [" << m.a21() << ", "
            << m.a22() << "]]";
}

Matrix2c e_matrix(double x, double n) {
  const Complex phase = std::polar(1.0, std::numbers::pi * x * n);
  return Matrix2c::diagonal(phase, std::conj(phase));
}

Matrix2c e_delta(long long l, long long n, long long grid_size) {
  if (grid_size <= 0) throw std::invalid_argument("e_delta: grid size must be positive");
  const long long period = 2 * grid_size;
  long long r = ((l % period) * (n % period)) % period;
  if (r < 0) r += period;
  const Complex phase =
      std::polar(1.0, std::numbers::pi * static_cast<double>(r) / static_cast<double>(grid_size));
  return Matrix2c::diagonal(phase, std::conj(phase));
}

Matrix2c j_power(long long d) {
  switch (((d % 4) + 4) % 4) {
    case 0: return Matrix2c::identity();
    case 1: return {0.0, 1.0, -1.0, 0.0};
    case 2: return Matrix2c::diagonal(-1.0, -1.0);
    default: return {0.0, -1.0, 1.0, 0.0};
  }
}

Matrix2c rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, s, -s, c};
}

Matrix2c exp_traceless(const Matrix2c& a) {
  const double scale = std::max(1.0, a.max_norm());
  if (std::abs(a.trace()) > 1e-12 * scale) {
    throw std::invalid_argument("exp_traceless: matrix is not traceless");
  }
  // A^2 = -det(A) I, so the exponential series splits into cos/sin of w.
  const Complex w = std::sqrt(a.det());
  Complex sinc;
  if (std::abs(w) < 1e-4) {
    const Complex w2 = w * w;
    sinc = 1.0 - w2 / 6.0 + w2 * w2 / 120.0 - w2 * w2 * w2 / 5040.0;
  } else {
    sinc = std::sin(w) / w;
  }
  return std::cos(w) * Matrix2c::identity() + sinc * a;
}

bool is_su2(const Matrix2c& a, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_su2: tolerance must be positive");
  if (std::abs(a.det() - 1.0) > tol) return false;
  return max_diff(a.adjoint() * a, Matrix2c::identity()) <= tol;
}

}  // namespace nlft
