#include "doctest.h"
#include "oracles.hpp"
#include "rtdsp/codec.hpp"

using namespace rtdsp;

TEST_CASE("saturate clamps instead of wrapping") {
  CHECK(saturate(0) == 0);
  CHECK(saturate(40000) == 32767);
  CHECK(saturate(-40000) == -32768);
  CHECK(saturate(32767) == 32767);
  CHECK(saturate(-32768) == -32768);

  // 30000 + 30000 wraps to -5536 in 16-bit two's complement; we must not.
  const std::int32_t sum = 30000 + 30000;
  CHECK(static_cast<std::int16_t>(static_cast<std::uint16_t>(sum)) == -5536);
  CHECK(saturate(sum) == 32767);
}

TEST_CASE("saturate is idempotent") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> dist(-1'000'000, 1'000'000);
  for (int i = 0; i < 10000; ++i) {
    const long long x = dist(rng);
    CHECK(saturate(saturate(x)) == saturate(x));
  }
}

TEST_CASE("apply_gain_db") {
  CHECK(apply_gain_db(1000, 0.0) == 1000);
  // 1000 * 10^(-6.0205999/20) = 500.00000076 (50-digit evaluation)
  CHECK(apply_gain_db(1000, -6.0205999) == 500);
  CHECK(apply_gain_db(32767, 6.0) == 32767);
  CHECK(apply_gain_db(-32768, 6.0) == -32768);
  CHECK(apply_gain_db(3, -6.0205999) == 2);    // 1.5 rounds away from zero
  CHECK(apply_gain_db(-3, -6.0205999) == -2);
}

TEST_CASE("apply_gain_db matches a high-precision oracle") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> samples(-32768, 32767);
  std::uniform_real_distribution<double> gains(-40.0, 40.0);
  for (int i = 0; i < 2000; ++i) {
    const auto s = static_cast<Sample16>(samples(rng));
    const double g = gains(rng);
    const oracle::BigFloat exact =
        oracle::BigFloat(s) * boost::multiprecision::pow(oracle::BigFloat(10), oracle::BigFloat(g) / 20);
    const double ref = std::clamp(exact.convert_to<double>(), -32768.0, 32767.0);
    CHECK(std::abs(apply_gain_db(s, g) - ref) <= 0.5 + 1e-6);
  }
}

TEST_CASE("0 dB gain is the identity on every sample") {
  for (int v = -32768; v <= 32767; ++v) {
    REQUIRE(apply_gain_db(static_cast<Sample16>(v), 0.0) == v);
  }
}

TEST_CASE("CodecConfig validation") {
  CHECK_NOTHROW(CodecConfig(48000));
  CHECK_NOTHROW(CodecConfig(8000, 0.0, 0.0, InputSource::mic_in));
  CHECK_THROWS_AS(CodecConfig(12345), std::invalid_argument);
  CHECK_THROWS_AS(CodecConfig(0), std::invalid_argument);
  CHECK_THROWS_AS(CodecConfig(48000, 0.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(CodecConfig(48000, std::nan(""), 0.0), std::invalid_argument);
  const CodecConfig c(8000, 3.0, 6.0, InputSource::mic_in);
  CHECK(c.sample_rate_hz() == 8000);
  CHECK(c.adc_gain_db() == 3.0);
  CHECK(c.dac_atten_db() == 6.0);
  CHECK(c.input_source() == InputSource::mic_in);
}
