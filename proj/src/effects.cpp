#include "rtdsp/effects.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rtdsp/kernels.hpp"

namespace rtdsp {

DelayLine::DelayLine(std::size_t length) {
  if (length == 0) throw std::invalid_argument("delay line length must be at least 1");
  buffer_.assign(length, 0);
}

void DelayLine::clear() noexcept {
  std::fill(buffer_.begin(), buffer_.end(), Sample16{0});
  index_ = 0;
}

void DelayLine::set_write_index(std::size_t i) {
  if (i >= buffer_.size()) throw std::out_of_range("write index past end of delay line");
  index_ = i;
}

EchoParams::EchoParams(double gain, std::size_t delay_len) : gain_(gain), delay_len_(delay_len) {
  if (!(gain >= 0.0 && gain < 1.0)) {
    throw std::invalid_argument("echo gain must be in [0, 1)");
  }
  if (delay_len == 0) throw std::invalid_argument("echo delay length must be at least 1");
}

namespace {

void check_lengths(const DelayLine& line, const EchoParams& params) {
  if (params.delay_len() != line.length()) {
    throw std::invalid_argument("echo params delay length does not match the delay line");
  }
}

void check_out(std::span<const Sample16> in, std::span<Sample16> out) {
  if (out.size() < in.size()) throw std::invalid_argument("output block shorter than input");
}

}  // namespace

Sample16 delay_step(DelayLine& line, Sample16 input) noexcept {
  Sample16 out = 0;
  line.set_write_index(kernels::scalar::delay(line.slots(), line.write_index(), {&input, 1}, {&out, 1}));
  return out;
}

Sample16 echo_step(DelayLine& line, const EchoParams& params, Sample16 input) {
  check_lengths(line, params);
  Sample16 out = 0;
  line.set_write_index(kernels::scalar::echo(line.slots(), line.write_index(), params.gain(),
                                             {&input, 1}, {&out, 1}));
  return out;
}

void delay_block(DelayLine& line, std::span<const Sample16> in, std::span<Sample16> out) {
  check_out(in, out);
  line.set_write_index(kernels::active().delay(line.slots(), line.write_index(), in, out));
}

void echo_block(DelayLine& line, const EchoParams& params, std::span<const Sample16> in,
                std::span<Sample16> out) {
  check_lengths(line, params);
  check_out(in, out);
  line.set_write_index(
      kernels::active().echo(line.slots(), line.write_index(), params.gain(), in, out));
}

}  // namespace rtdsp
