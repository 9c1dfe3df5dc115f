#include <cassert>

#include "rtdsp/kernels.hpp"

namespace rtdsp::kernels::scalar {

void apply_gain(std::span<const Sample16> in, std::span<Sample16> out, double factor) {
  assert(out.size() >= in.size());
  for (std::size_t n = 0; n < in.size(); ++n) {
    out[n] = saturate_round(double(in[n]) * factor);
  }
}

std::size_t delay(std::span<Sample16> line, std::size_t i, std::span<const Sample16> in,
                  std::span<Sample16> out) {
  assert(!line.empty() && i < line.size() && out.size() >= in.size());
  const std::size_t d = line.size();
  for (std::size_t n = 0; n < in.size(); ++n) {
    const Sample16 x = in[n];
    const Sample16 delayed = line[i];
    out[n] = saturate(std::int32_t(delayed) + x);
    line[i] = x;
    if (++i == d) i = 0;
  }
  return i;
}

std::size_t echo(std::span<Sample16> line, std::size_t i, double gain,
                 std::span<const Sample16> in, std::span<Sample16> out) {
  assert(!line.empty() && i < line.size() && out.size() >= in.size());
  const std::size_t d = line.size();
  for (std::size_t n = 0; n < in.size(); ++n) {
    const Sample16 x = in[n];
    const Sample16 delayed = line[i];
    out[n] = saturate(std::int32_t(delayed) + x);
    line[i] = saturate_round(double(x) + double(delayed) * gain);
    if (++i == d) i = 0;
  }
  return i;
}

void downmix(std::span<const Sample16> left, std::span<const Sample16> right,
             std::span<Sample16> out) {
  assert(left.size() == right.size() && out.size() >= left.size());
  for (std::size_t n = 0; n < left.size(); ++n) {
    const std::int32_t sum = std::int32_t(left[n]) + right[n];
    out[n] = saturate(sum >= 0 ? (sum + 1) / 2 : (sum - 1) / 2);
  }
}

void to_pcm(std::span<const double> in, std::span<Sample16> out, double full_scale) {
  assert(out.size() >= in.size());
  for (std::size_t n = 0; n < in.size(); ++n) {
    out[n] = saturate_round(in[n] * full_scale);
  }
}

}  // namespace rtdsp::kernels::scalar
