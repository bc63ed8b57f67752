#ifndef NLFT_SIGNAL_HPP
#define NLFT_SIGNAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nlft/matrix2c.hpp"

namespace nlft {

/// Samples u_0..u_{N-1} of a step function on [0, 1].
///
/// A signal built from real values is flagged real-valued; the series and
/// extraction routines only accept those. Complex samples are allowed for
/// the product-form transforms.
class Signal {
 public:
  /// Throws std::invalid_argument on an empty sample vector.
  static Signal real(std::vector<double> samples);
  static Signal complex(std::vector<Complex> samples);
  /// u_l = value for every l.
  static Signal constant(std::size_t size, double value);
  static Signal zero(std::size_t size) { return constant(size, 0.0); }

  std::size_t size() const { return samples_.size(); }
  bool real_valued() const { return real_valued_; }
  Complex operator[](std::size_t i) const { return samples_[i]; }
  std::span<const Complex> samples() const { return samples_; }
  /// Real parts; throws if the signal is not real-valued.
  std::vector<double> real_samples() const;

 private:
  Signal(std::vector<Complex> samples, bool real_valued);

  std::vector<Complex> samples_;
  bool real_valued_ = true;
};

/// Matrix values indexed by consecutive spectral indices
/// first_index, first_index + 1, ... over a grid of size N.
struct SpectralSequence {
  long long grid_size = 0;
  long long first_index = 0;
  std::vector<Matrix2c> values;

  /// True when the sequence covers exactly n = 0..N-1.
  bool covers_discrete_grid() const {
    return first_index == 0 && grid_size > 0 &&
           values.size() == static_cast<std::size_t>(grid_size);
  }
  const Matrix2c& at(long long n) const;
};

}  // namespace nlft

#endif  // NLFT_SIGNAL_HPP
