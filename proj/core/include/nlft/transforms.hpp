#ifndef NLFT_TRANSFORMS_HPP
#define NLFT_TRANSFORMS_HPP

#include <string_view>
#include <vector>

#include "nlft/matrix2c.hpp"
#include "nlft/signal.hpp"

namespace nlft {

// Continuous transform ------------------------------------------------------

/// Exact transform of the constant function u on [0, 1]:
/// (-1)^n exp([[i pi n, u], [-u, -i pi n]]).
Matrix2c nlft_constant(double u, long long n);

/// Exact transform of the step function with the given samples, as the
/// ordered product of per-step exponentials (step N-1 leftmost), times (-1)^n.
Matrix2c nlft_step(const Signal& u, long long n);

/// Per-order Dyson terms in the diagonal-free gauge, terms[0] = I.
///
/// Each term is accumulated by Picard iteration on a uniform grid of
/// `quad_points` nodes with cumulative trapezoid sums, so the cost is
/// O(max_order * quad_points). Throws if quad_points < 2 or max_order < 0.
std::vector<Matrix2c> nlft_dyson_terms(const Signal& u, long long n,
                                       int max_order, int quad_points);

/// I plus the first `max_order` Dyson terms.
Matrix2c nlft_dyson(const Signal& u, long long n, int max_order, int quad_points);

/// Series of the constant-signal transform in powers of u whose d-th
/// coefficient is the l-integral of Vol(D_d(l)) E(-2l, n) J^d, evaluated
/// with composite Simpson on `panels` (even) panels.
Matrix2c nlft_volume_expansion(double u, long long n, int max_order, int panels);

/// d-th term u^d * integral alone (d >= 1).
Matrix2c nlft_volume_term(double u, long long n, int order, int panels);

// Discretizations -----------------------------------------------------------

/// Euler discretization: prod_{k=N-1..0} (I + L_N(k, n) / N).
/// Throws std::out_of_range unless 0 <= n < N.
Matrix2c f_n(const Signal& u, long long n);

/// Splitting discretization in its conjugated form,
/// prod_{l=N-1..0} (cos(u_l/N) I + sin(u_l/N) E_delta(-2l, n) J).
/// SU(2)-valued. Requires a real-valued signal.
Matrix2c g_n(const Signal& u, long long n);

/// The same splitting written as E_delta(1,n) R(u_{N-1}/N) ... E_delta(1,n) R(u_0/N).
/// Equals (-1)^n g_n(u, n).
Matrix2c g_n_split_form(const Signal& u, long long n);

/// prod_l cos(u_l / N); g_n(u) = tan_relation_factor(u) * f_n(N tan(u / N)).
double tan_relation_factor(const Signal& u);

/// The signal whose f_n reproduces g_n up to tan_relation_factor:
/// samples N tan(u_l / N).
Signal tan_scaled_signal(const Signal& u);

enum class TransformKind { discrete_euler, discrete_splitting, step };

std::string_view to_string(TransformKind kind);

/// Evaluates the transform at every n in 0..N-1. Large grids are split
/// across worker threads; each index is written by exactly one worker.
SpectralSequence spectral_table(TransformKind kind, const Signal& u);

}  // namespace nlft

#endif  // NLFT_TRANSFORMS_HPP
