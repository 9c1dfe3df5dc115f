#include "rtdsp/codec.hpp"

#include <stdexcept>
#include <string>

namespace rtdsp {

CodecConfig::CodecConfig(int sample_rate_hz, double adc_gain_db, double dac_atten_db,
                         InputSource input)
    : sample_rate_hz_(sample_rate_hz),
      adc_gain_db_(adc_gain_db),
      dac_atten_db_(dac_atten_db),
      input_(input) {
  if (!is_supported_rate(sample_rate_hz)) {
    throw std::invalid_argument("unsupported codec sample rate: " + std::to_string(sample_rate_hz));
  }
  if (!std::isfinite(adc_gain_db)) {
    throw std::invalid_argument("ADC gain must be finite");
  }
  if (!std::isfinite(dac_atten_db) || dac_atten_db < 0.0) {
    throw std::invalid_argument("DAC attenuation must be a finite, non-negative dB value");
  }
}

bool CodecConfig::is_supported_rate(int hz) noexcept {
  return std::find(kSupportedRates.begin(), kSupportedRates.end(), hz) != kSupportedRates.end();
}

double gain_factor(double gain_db) {
  if (gain_db == 0.0) return 1.0;
  return std::pow(10.0, gain_db / 20.0);
}

Sample16 apply_gain_db(Sample16 s, double gain_db) {
  if (gain_db == 0.0) return s;
  return saturate_round(double(s) * gain_factor(gain_db));
}

}  // namespace rtdsp
