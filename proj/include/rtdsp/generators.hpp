#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rtdsp/codec.hpp"

namespace rtdsp {

/// Which value of pi the sine formula uses. `paper_3_14` keeps the board
/// demo's truncated constant so its plot can be reproduced.
enum class PiMode { exact, paper_3_14 };

struct SineSpec {
  std::size_t num_samples = 100;
  double cycles = 1.0;
  double amplitude = 1.0;
  PiMode pi_mode = PiMode::exact;
};

/// y[i] = amplitude * sin(2 * P * cycles * i / num_samples).
/// Throws std::invalid_argument on zero samples or non-positive/non-finite cycles or amplitude.
std::vector<double> gen_sine(const SineSpec& spec);

/// Maps [-1, 1] reals onto PCM: saturate(round(x * full_scale)).
/// Throws std::invalid_argument on a non-finite sample or full_scale outside 1..32767.
std::vector<Sample16> to_pcm(std::span<const double> samples, int full_scale = kSampleMax);

}  // namespace rtdsp
