#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rtdsp/codec.hpp"

namespace rtdsp {

/// Fixed-length circular sample buffer with a write index. Starts zeroed at index 0.
class DelayLine {
 public:
  /// Throws std::invalid_argument when length is 0.
  explicit DelayLine(std::size_t length);

  std::size_t length() const noexcept { return buffer_.size(); }
  std::size_t write_index() const noexcept { return index_; }
  std::span<const Sample16> buffer() const noexcept { return buffer_; }

  void clear() noexcept;

  // Raw access for the block kernels.
  std::span<Sample16> slots() noexcept { return buffer_; }
  void set_write_index(std::size_t i);

  friend bool operator==(const DelayLine&, const DelayLine&) = default;

 private:
  std::vector<Sample16> buffer_;
  std::size_t index_ = 0;
};

/// Feedback settings for the echo kernel. gain must lie in [0, 1).
class EchoParams {
 public:
  /// Throws std::invalid_argument on a gain outside [0, 1) or a zero length.
  EchoParams(double gain, std::size_t delay_len);

  double gain() const noexcept { return gain_; }
  std::size_t delay_len() const noexcept { return delay_len_; }

 private:
  double gain_;
  std::size_t delay_len_;
};

inline constexpr std::size_t kDefaultDelayLength = 400;
inline constexpr std::size_t kDefaultEchoLength = 4000;
inline constexpr double kDefaultEchoGain = 0.6;

/// Loopback: the sample goes straight back out.
constexpr Sample16 passthrough(Sample16 input) noexcept { return input; }

/// One interrupt of the delay program: out = delayed + input, slot <- input.
Sample16 delay_step(DelayLine& line, Sample16 input) noexcept;

/// One interrupt of the echo program: out = delayed + input,
/// slot <- round(input + delayed * gain). Requires params.delay_len() == line.length().
Sample16 echo_step(DelayLine& line, const EchoParams& params, Sample16 input);

/// Block forms, dispatched to the active SIMD kernels. Equivalent to calling the
/// step functions once per sample in order. `out` must hold in.size() samples
/// and may alias `in`.
void delay_block(DelayLine& line, std::span<const Sample16> in, std::span<Sample16> out);
void echo_block(DelayLine& line, const EchoParams& params, std::span<const Sample16> in,
                std::span<Sample16> out);

}  // namespace rtdsp
