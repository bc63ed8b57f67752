#ifndef NLFT_MATRIX2C_HPP
#define NLFT_MATRIX2C_HPP

#include <array>
#include <complex>
#include <iosfwd>

namespace nlft {

using Complex = std::complex<double>;

/// 2x2 complex matrix, stored row-major. Plain value type.
class Matrix2c {
 public:
  constexpr Matrix2c() = default;
  constexpr Matrix2c(Complex a11, Complex a12, Complex a21, Complex a22)
      : entries_{a11, a12, a21, a22} {}

  static constexpr Matrix2c identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Matrix2c zero() { return {}; }
  static constexpr Matrix2c diagonal(Complex a, Complex b) {
    return {a, 0.0, 0.0, b};
  }

  /// Zero-based (row, col) access.
  constexpr Complex operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(2 * row + col)];
  }

  constexpr Complex a11() const { return entries_[0]; }
  constexpr Complex a12() const { return entries_[1]; }
  constexpr Complex a21() const { return entries_[2]; }
  constexpr Complex a22() const { return entries_[3]; }

  Complex trace() const { return entries_[0] + entries_[3]; }
  Complex det() const {
    return entries_[0] * entries_[3] - entries_[1] * entries_[2];
  }
  Matrix2c adjoint() const {
    return {std::conj(entries_[0]), std::conj(entries_[2]),
            std::conj(entries_[1]), std::conj(entries_[3])};
  }
  /// Largest entry modulus.
  double max_norm() const;

  const std::array<Complex, 4>& entries() const { return entries_; }

  Matrix2c& operator+=(const Matrix2c& rhs);
  Matrix2c& operator-=(const Matrix2c& rhs);
  Matrix2c& operator*=(Complex s);

  friend Matrix2c operator+(Matrix2c lhs, const Matrix2c& rhs) { return lhs += rhs; }
  friend Matrix2c operator-(Matrix2c lhs, const Matrix2c& rhs) { return lhs -= rhs; }
  friend Matrix2c operator-(const Matrix2c& m) { return Complex(-1.0) * m; }
  friend Matrix2c operator*(Complex s, Matrix2c m) { return m *= s; }
  friend Matrix2c operator*(Matrix2c m, Complex s) { return m *= s; }
  friend Matrix2c operator*(double s, Matrix2c m) { return m *= Complex(s); }
  friend Matrix2c operator*(const Matrix2c& lhs, const Matrix2c& rhs) {
    const auto& a = lhs.entries_;
    const auto& b = rhs.entries_;
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
  }

 private:
  std::array<Complex, 4> entries_{};
};

/// Max-entry distance between two matrices.
double max_diff(const Matrix2c& a, const Matrix2c& b);

std::ostream& operator<<(std::ostream& os, const Matrix2c& m);

/// diag(e^{i pi x n}, e^{-i pi x n}).
Matrix2c e_matrix(double x, double n);

/// Discrete phase matrix diag(e^{i pi l n / N}, e^{-i pi l n / N}).
/// The product l*n is reduced modulo 2N before the exponential so
/// orthogonality sums stay exact to rounding. Throws on N <= 0.
Matrix2c e_delta(long long l, long long n, long long grid_size);

/// J^d for any integer d (period 4).
Matrix2c j_power(long long d);

/// [[cos t, sin t], [-sin t, cos t]] = cos t I + sin t J.
Matrix2c rotation(double theta);

/// exp(A) for traceless A via cos(w) I + sin(w)/w A with w^2 = det A.
/// w is taken as a complex square root, so hyperbolic cases work too.
/// Throws std::invalid_argument if |tr A| exceeds 1e-12 (scaled by |A|).
Matrix2c exp_traceless(const Matrix2c& a);

/// |det A - 1| <= tol and max |A* A - I| <= tol.
bool is_su2(const Matrix2c& a, double tol);

}  // namespace nlft

#endif  // NLFT_MATRIX2C_HPP
