#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace rtdsp {

/// Signed 16-bit PCM sample. Every real-time kernel works in this unit.
using Sample16 = std::int16_t;

inline constexpr std::int32_t kSampleMin = std::numeric_limits<Sample16>::min();
inline constexpr std::int32_t kSampleMax = std::numeric_limits<Sample16>::max();

/// Clamps a wide integer into the 16-bit range. Overflow never wraps.
constexpr Sample16 saturate(std::int64_t wide) noexcept {
  return static_cast<Sample16>(std::clamp<std::int64_t>(wide, kSampleMin, kSampleMax));
}

/// Rounds half away from zero, then clamps. Non-finite input is the caller's problem.
inline Sample16 saturate_round(double x) noexcept {
  const double r = std::round(x);
  return static_cast<Sample16>(std::clamp(r, double(kSampleMin), double(kSampleMax)));
}

enum class InputSource { line_in, mic_in };

/// Virtual AIC3106 settings, as passed to the board's interrupt-mode init call.
class CodecConfig {
 public:
  static constexpr std::array<int, 9> kSupportedRates = {
      8000, 9600, 11025, 16000, 22050, 24000, 32000, 44100, 48000};

  /// Throws std::invalid_argument for an unsupported rate, a negative or
  /// non-finite attenuation, or a non-finite gain.
  CodecConfig(int sample_rate_hz, double adc_gain_db = 0.0, double dac_atten_db = 0.0,
              InputSource input = InputSource::line_in);

  static bool is_supported_rate(int hz) noexcept;

  int sample_rate_hz() const noexcept { return sample_rate_hz_; }
  double adc_gain_db() const noexcept { return adc_gain_db_; }
  double dac_atten_db() const noexcept { return dac_atten_db_; }
  InputSource input_source() const noexcept { return input_; }

 private:
  int sample_rate_hz_;
  double adc_gain_db_;
  double dac_atten_db_;
  InputSource input_;
};

/// Linear amplitude factor for a level change in dB. Exactly 1.0 at 0 dB.
double gain_factor(double gain_db);

/// saturate(round(s * 10^(gain_db/20))). Identity at 0 dB.
Sample16 apply_gain_db(Sample16 s, double gain_db);

}  // namespace rtdsp
