#include "nlft/signal.hpp"

#include <stdexcept>
#include <string>

namespace nlft {

Signal::Signal(std::vector<Complex> samples, bool real_valued)
    : samples_(std::move(samples)), real_valued_(real_valued) {
  if (samples_.empty()) throw std::invalid_argument("Signal: no samples");
}

Signal Signal::real(std::vector<double> samples) {
  std::vector<Complex> values(samples.begin(), samples.end());
  return Signal(std::move(values), true);
}

Signal Signal::complex(std::vector<Complex> samples) {
  return Signal(std::move(samples), false);
}

Signal Signal::constant(std::size_t size, double value) {
  return real(std::vector<double>(size, value));
}

std::vector<double> Signal::real_samples() const {
  if (!real_valued_) throw std::invalid_argument("Signal: real-valued signal required");
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const auto& z : samples_) out.push_back(z.real());
  return out;
}

const Matrix2c& SpectralSequence::at(long long n) const {
  const long long offset = n - first_index;
  if (offset < 0 || offset >= static_cast<long long>(values.size())) {
    throw std::out_of_range("SpectralSequence: index " + std::to_string(n) +
                            " not covered");
  }
  return values[static_cast<std::size_t>(offset)];
}

}  // namespace nlft
