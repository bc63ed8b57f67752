#include "nlft/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nlft {
namespace {

int total_degree(const Exponent& k) { return std::accumulate(k.begin(), k.end(), 0); }

}  // namespace

MultiPolyMatrix::MultiPolyMatrix(std::size_t n_vars, int cap) : n_vars_(n_vars), cap_(cap) {
  if (n_vars == 0) throw std::invalid_argument("MultiPolyMatrix: no variables");
  if (cap < 0) throw std::invalid_argument("MultiPolyMatrix: negative degree cap");
}

MultiPolyMatrix MultiPolyMatrix::constant(std::size_t n_vars, int cap, const Matrix2c& m) {
  MultiPolyMatrix p(n_vars, cap);
  p.add_term(Exponent(n_vars, 0), m);
  return p;
}

Matrix2c MultiPolyMatrix::coefficient(const Exponent& k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Matrix2c::zero() : it->second;
}

void MultiPolyMatrix::add_term(const Exponent& k, const Matrix2c& m) {
  if (k.size() != n_vars_) throw std::invalid_argument("MultiPolyMatrix: exponent size mismatch");
  if (total_degree(k) > cap_) return;
  terms_[k] += m;
}

MultiPolyMatrix MultiPolyMatrix::homogeneous_part(int degree) const {
  MultiPolyMatrix p(n_vars_, cap_);
  for (const auto& [k, m] : terms_) {
    if (total_degree(k) == degree) p.terms_.emplace(k, m);
  }
  return p;
}

MultiPolyMatrix operator+(const MultiPolyMatrix& a, const MultiPolyMatrix& b) {
  if (a.n_vars_ != b.n_vars_) throw std::invalid_argument("MultiPolyMatrix: variable mismatch");
  MultiPolyMatrix r(a.n_vars_, std::min(a.cap_, b.cap_));
  for (const auto& [k, m] : a.terms_) r.add_term(k, m);
  for (const auto& [k, m] : b.terms_) r.add_term(k, m);
  return r;
}

MultiPolyMatrix operator*(const MultiPolyMatrix& a, const MultiPolyMatrix& b) {
  if (a.n_vars_ != b.n_vars_) throw std::invalid_argument("MultiPolyMatrix: variable mismatch");
  MultiPolyMatrix r(a.n_vars_, std::min(a.cap_, b.cap_));
  Exponent k(a.n_vars_);
  for (const auto& [ka, ma] : a.terms_) {
    const int da = total_degree(ka);
    for (const auto& [kb, mb] : b.terms_) {
      if (da + total_degree(kb) > r.cap_) continue;
      for (std::size_t j = 0; j < k.size(); ++j) k[j] = ka[j] + kb[j];
      r.terms_[k] += ma * mb;
    }
  }
  return r;
}

std::size_t monomial_budget(std::size_t n_vars, int cap) {
  // C(n + cap, cap) built incrementally; each partial value is itself a binomial.
  long double value = 1.0L;
  for (int i = 1; i <= cap; ++i) {
    value = value * static_cast<long double>(n_vars + static_cast<std::size_t>(i)) / i;
    if (value > static_cast<long double>(std::numeric_limits<std::size_t>::max() / 2)) {
      return std::numeric_limits<std::size_t>::max();
    }
  }
  return static_cast<std::size_t>(value + 0.5L);
}

}  // namespace nlft
