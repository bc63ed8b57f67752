#include "nlft/jet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlft {
namespace {

void check_order(int order) {
  if (order < 0) throw std::invalid_argument("jet order must be >= 0");
}

}  // namespace

Jet::Jet(int order) {
  check_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, 0.0);
}

Jet::Jet(int order, std::vector<double> coeffs) : Jet(order) {
  const auto n = std::min(coeffs.size(), coeffs_.size());
  std::copy_n(coeffs.begin(), n, coeffs_.begin());
}

Jet Jet::linear(int order, double value, double slope) {
  Jet j(order);
  j.coeffs_[0] = value;
  if (order >= 1) j.coeffs_[1] = slope;
  return j;
}

Jet operator+(const Jet& a, const Jet& b) {
  if (a.order() != b.order()) throw std::invalid_argument("jet order mismatch");
  Jet r(a.order());
  for (int k = 0; k <= a.order(); ++k) r.coeffs_[k] = a[k] + b[k];
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  if (a.order() != b.order()) throw std::invalid_argument("jet order mismatch");
  Jet r(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    for (int j = 0; i + j <= a.order(); ++j) r.coeffs_[i + j] += a[i] * b[j];
  }
  return r;
}

Jet operator*(double s, const Jet& a) {
  Jet r = a;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

CosSin cos_sin(const Jet& a) {
  const int order = a.order();
  std::vector<double> c(order + 1, 0.0);
  std::vector<double> s(order + 1, 0.0);
  c[0] = std::cos(a[0]);
  s[0] = std::sin(a[0]);
  for (int k = 1; k <= order; ++k) {
    double ck = 0.0;
    double sk = 0.0;
    for (int j = 1; j <= k; ++j) {
      ck -= j * a[j] * s[k - j];
      sk += j * a[j] * c[k - j];
    }
    c[k] = ck / k;
    s[k] = sk / k;
  }
  return {Jet(order, std::move(c)), Jet(order, std::move(s))};
}

JetMatrix::JetMatrix(int order) {
  check_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Matrix2c::zero());
}

JetMatrix JetMatrix::constant(int order, const Matrix2c& m) {
  JetMatrix j(order);
  j.coeffs_[0] = m;
  return j;
}

JetMatrix JetMatrix::combine(const Jet& a, const Jet& b, const Matrix2c& m) {
  if (a.order() != b.order()) throw std::invalid_argument("jet order mismatch");
  JetMatrix j(a.order());
  for (int k = 0; k <= a.order(); ++k) {
    j.coeffs_[k] = a[k] * Matrix2c::identity() + b[k] * m;
  }
  return j;
}

JetMatrix operator*(const JetMatrix& a, const JetMatrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("jet order mismatch");
  JetMatrix r(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    for (int j = 0; i + j <= a.order(); ++j) r.coeffs_[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace nlft
