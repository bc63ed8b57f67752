#ifndef NLFT_JET_HPP
#define NLFT_JET_HPP

#include <vector>

#include "nlft/matrix2c.hpp"

namespace nlft {

/// Truncated Taylor series c_0 + c_1 s + ... + c_D s^D with real coefficients.
class Jet {
 public:
  explicit Jet(int order);
  Jet(int order, std::vector<double> coeffs);

  /// s scaled: value + slope * s.
  static Jet linear(int order, double value, double slope);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  double operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(double s, const Jet& a);

 private:
  std::vector<double> coeffs_;
};

/// cos and sin of a jet, computed together by the coupled recurrences
/// k c_k = -sum j a_j s_{k-j}, k s_k = sum j a_j c_{k-j}.
struct CosSin {
  Jet cos;
  Jet sin;
};
CosSin cos_sin(const Jet& a);

/// Truncated Taylor series with Matrix2c coefficients.
class JetMatrix {
 public:
  explicit JetMatrix(int order);

  static JetMatrix constant(int order, const Matrix2c& m);
  /// a(s) I + b(s) M for scalar jets a, b and a fixed matrix M.
  static JetMatrix combine(const Jet& a, const Jet& b, const Matrix2c& m);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Matrix2c& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<Matrix2c>& coeffs() const { return coeffs_; }

  /// Truncated product; orders must match.
  friend JetMatrix operator*(const JetMatrix& a, const JetMatrix& b);

 private:
  std::vector<Matrix2c> coeffs_;
};

}  // namespace nlft

#endif  // NLFT_JET_HPP
