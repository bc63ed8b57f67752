#ifndef NLFT_MULTIPOLY_HPP
#define NLFT_MULTIPOLY_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "nlft/matrix2c.hpp"

namespace nlft {

/// Exponent vector (k_0, ..., k_{N-1}) of a monomial u_0^{k_0} ... u_{N-1}^{k_{N-1}}.
using Exponent = std::vector<int>;

/// Polynomial in N formal variables with Matrix2c coefficients, truncated at
/// total degree `cap`. Products drop every term above the cap.
class MultiPolyMatrix {
 public:
  MultiPolyMatrix(std::size_t n_vars, int cap);

  static MultiPolyMatrix constant(std::size_t n_vars, int cap, const Matrix2c& m);

  std::size_t n_vars() const { return n_vars_; }
  int cap() const { return cap_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponent, Matrix2c>& terms() const { return terms_; }

  /// Coefficient of the given monomial (zero when absent).
  Matrix2c coefficient(const Exponent& k) const;

  /// Adds m to the coefficient of u^k; terms above the cap are ignored.
  void add_term(const Exponent& k, const Matrix2c& m);

  /// Degree-`degree` homogeneous part.
  MultiPolyMatrix homogeneous_part(int degree) const;

  friend MultiPolyMatrix operator+(const MultiPolyMatrix& a, const MultiPolyMatrix& b);
  friend MultiPolyMatrix operator*(const MultiPolyMatrix& a, const MultiPolyMatrix& b);

 private:
  std::size_t n_vars_;
  int cap_;
  std::map<Exponent, Matrix2c> terms_;
};

/// Number of monomials of total degree <= cap in n_vars variables, C(n + cap, cap),
/// saturating at SIZE_MAX.
std::size_t monomial_budget(std::size_t n_vars, int cap);

}  // namespace nlft

#endif  // NLFT_MULTIPOLY_HPP
