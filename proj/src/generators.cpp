#include "rtdsp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rtdsp/kernels.hpp"

namespace rtdsp {

std::vector<double> gen_sine(const SineSpec& spec) {
  if (spec.num_samples == 0) throw std::invalid_argument("sine needs at least one sample");
  if (!std::isfinite(spec.cycles) || spec.cycles <= 0.0) {
    throw std::invalid_argument("cycles must be positive");
  }
  if (!std::isfinite(spec.amplitude) || spec.amplitude <= 0.0) {
    throw std::invalid_argument("amplitude must be positive");
  }
  const double pi = spec.pi_mode == PiMode::exact ? std::numbers::pi : 3.14;
  const double n = double(spec.num_samples);
  std::vector<double> y(spec.num_samples);
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = spec.amplitude * std::sin(2.0 * pi * spec.cycles * double(i) / n);
  }
  return y;
}

std::vector<Sample16> to_pcm(std::span<const double> samples, int full_scale) {
  if (full_scale < 1 || full_scale > kSampleMax) {
    throw std::invalid_argument("full scale must be in 1..32767");
  }
  if (!std::all_of(samples.begin(), samples.end(), [](double x) { return std::isfinite(x); })) {
    throw std::invalid_argument("cannot convert a non-finite sample to PCM");
  }
  std::vector<Sample16> out(samples.size());
  kernels::active().to_pcm(samples, out, double(full_scale));
  return out;
}

}  // namespace rtdsp
