#ifndef NLFT_EXTRACTION_HPP
#define NLFT_EXTRACTION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nlft/matrix2c.hpp"
#include "nlft/multipoly.hpp"
#include "nlft/partitions.hpp"
#include "nlft/signal.hpp"

namespace nlft {

/// Inverse discrete Fourier transform of a matrix sequence at shift l:
/// (1/N) sum_n E_delta(2l, n) seq(n). Throws std::invalid_argument unless the
/// sequence covers n = 0..N-1.
Matrix2c idft_matrix(const SpectralSequence& seq, long long shift);

/// Reads the scalar hidden in N^d * idft(seq)(l) * J^{-d}.
///
/// The adjusted matrix must be scalar * I to 1e-9 relative to N^d max_n |seq(n)|; the
/// (0, 0) entry is returned. Throws std::runtime_error otherwise.
Complex unscale_coefficient(const SpectralSequence& seq, long long shift, int degree);

/// Polynomial in one scalar variable with Matrix2c coefficients.
using UniPolyMatrix = std::vector<Matrix2c>;

/// prod_{k=N-1..0} (I + (u/N) E_delta(-2k, n) J) truncated at degree `cap`.
UniPolyMatrix f_n_poly(int grid_size, long long n, int cap);

/// Horner evaluation of a matrix polynomial at a scalar.
Matrix2c evaluate(const UniPolyMatrix& poly, double u);

struct ExtractedCount {
  BigInt value;
  double raw = 0.0;      ///< pre-rounding real part
  double residue = 0.0;  ///< |raw - round(raw)| plus the imaginary residue
};

/// AQ_N(l, d) recovered from the Euler discretization of the constant signal.
ExtractedCount extract_aq_detail(int grid_size, int shift, int parts);
/// Throws std::runtime_error when the rounding residue reaches 1e-6.
BigInt extract_aq(int grid_size, int shift, int parts);
/// Every l at once; the spectral sequence is built a single time.
std::vector<ExtractedCount> extract_aq_all(int grid_size, int parts);

/// D^d of the splitting discretization at s = 0 along the ray s * u:
/// (d/ds)^d g_n(s u, n), via jet arithmetic.
Matrix2c d_jet(const Signal& u, long long n, int degree);

/// Taylor expansion of g_n(u, n) in the N sample variables up to total degree cap.
MultiPolyMatrix g_n_taylor(int grid_size, long long n, int cap);

/// The same expansion with every degree-j term multiplied by j!, so the
/// degree-d homogeneous part is D^d g_n as a polynomial in u. Throws
/// std::length_error when C(N + cap, cap) exceeds 10^6 terms.
MultiPolyMatrix g_n_multipoly(int grid_size, long long n, int cap);

enum class PartialsRange {
  sphere,  ///< |k|_1 = d only
  box,     ///< every k in [0, d]^N
};

/// Sum over k of the mixed partial d^k/du^k of poly at u = 0.
Matrix2c mixed_partials_at_zero(const MultiPolyMatrix& poly, int degree, PartialsRange range);

ExtractedCount extract_ap_detail(int grid_size, int shift, int parts);
/// AP_N(l, d) recovered from the splitting discretization.
BigInt extract_ap(int grid_size, int shift, int parts);
std::vector<ExtractedCount> extract_ap_all(int grid_size, int parts);

/// Probability that a multinomial(d; u) draw k has alt(k) = l, through
/// N^d idft(D^d g_n[u])(l) J^{-d}. u must lie on the simplex (1e-12).
double p_alt(std::span<const double> u, int degree, int shift);

/// Same probability by direct enumeration of all k with |k|_1 = d.
double p_alt_direct(std::span<const double> u, int degree, int shift);

/// Multinomial mass d!/prod k_j! prod u_j^{k_j}.
double multinomial_mass(std::span<const double> u, const MultiIndex& k);

}  // namespace nlft

#endif  // NLFT_EXTRACTION_HPP
