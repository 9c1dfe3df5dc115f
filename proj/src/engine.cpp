#include "rtdsp/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rtdsp/kernels.hpp"

namespace rtdsp {

void SampleProcessor::process_block(std::span<const Sample16> in, std::span<Sample16> out) {
  for (std::size_t n = 0; n < in.size(); ++n) out[n] = process(in[n]);
}

void PassthroughProcessor::process_block(std::span<const Sample16> in, std::span<Sample16> out) {
  if (in.data() != out.data()) std::copy(in.begin(), in.end(), out.begin());
}

std::unique_ptr<SampleProcessor> PassthroughProcessor::clone() const {
  return std::make_unique<PassthroughProcessor>(*this);
}
std::unique_ptr<SampleProcessor> DelayProcessor::clone() const {
  return std::make_unique<DelayProcessor>(*this);
}
std::unique_ptr<SampleProcessor> EchoProcessor::clone() const {
  return std::make_unique<EchoProcessor>(*this);
}

std::optional<Effect> parse_effect(std::string_view name) noexcept {
  if (name == "passthrough" || name == "loopback") return Effect::passthrough;
  if (name == "delay") return Effect::delay;
  if (name == "echo") return Effect::echo;
  return std::nullopt;
}

std::string_view effect_name(Effect e) noexcept {
  switch (e) {
    case Effect::passthrough: return "passthrough";
    case Effect::delay: return "delay";
    case Effect::echo: return "echo";
  }
  return "?";
}

int default_sample_rate(Effect e) noexcept { return e == Effect::passthrough ? 48000 : 8000; }

std::unique_ptr<SampleProcessor> make_processor(Effect e, std::size_t buf_size, double gain) {
  switch (e) {
    case Effect::passthrough: return std::make_unique<PassthroughProcessor>();
    case Effect::delay: return std::make_unique<DelayProcessor>(buf_size);
    case Effect::echo: return std::make_unique<EchoProcessor>(EchoParams{gain, buf_size});
  }
  throw std::invalid_argument("unknown effect");
}

namespace {

using Clock = std::chrono::steady_clock;

EngineReport make_report(std::size_t samples, Clock::duration elapsed, int rate) {
  EngineReport r;
  r.samples_processed = samples;
  r.wall_seconds = std::chrono::duration<double>(elapsed).count();
  if (samples > 0) r.real_time_factor = r.wall_seconds * rate / double(samples);
  return r;
}

}  // namespace

RunResult run(const CodecConfig& config, SampleProcessor& proc, std::span<const Sample16> input) {
  RunResult result;
  result.output.resize(input.size());
  const double adc = config.adc_gain_db();
  const double dac = -config.dac_atten_db();
  const double adc_factor = gain_factor(adc);
  const double dac_factor = gain_factor(dac);
  const auto& k = kernels::active();
  std::vector<Sample16> scratch(std::min(input.size(), kInterruptBlock));

  const auto start = Clock::now();
  for (std::size_t n = 0; n < input.size(); n += kInterruptBlock) {
    const std::size_t len = std::min(kInterruptBlock, input.size() - n);
    std::span<const Sample16> in = input.subspan(n, len);
    std::span<Sample16> out{result.output.data() + n, len};
    if (adc != 0.0) {
      std::span<Sample16> tmp{scratch.data(), len};
      k.apply_gain(in, tmp, adc_factor);
      in = tmp;
    }
    proc.process_block(in, out);
    if (dac != 0.0) k.apply_gain(out, out, dac_factor);
  }
  result.report = make_report(input.size(), Clock::now() - start, config.sample_rate_hz());
  return result;
}

RunResult run_per_sample(const CodecConfig& config, SampleProcessor& proc,
                         std::span<const Sample16> input) {
  RunResult result;
  result.output.reserve(input.size());
  const auto start = Clock::now();
  for (const Sample16 x : input) {
    const Sample16 in = apply_gain_db(x, config.adc_gain_db());
    result.output.push_back(apply_gain_db(proc.process(in), -config.dac_atten_db()));
  }
  result.report = make_report(input.size(), Clock::now() - start, config.sample_rate_hz());
  return result;
}

std::uint64_t sample_count(int sample_rate_hz, double seconds) {
  return static_cast<std::uint64_t>(std::llround(seconds * sample_rate_hz));
}

EngineReport measure_rtf(const CodecConfig& config, SampleProcessor& proc, double duration_seconds) {
  if (!std::isfinite(duration_seconds) || duration_seconds <= 0.0) {
    throw std::invalid_argument("benchmark duration must be a positive number of seconds");
  }
  const std::uint64_t count = sample_count(config.sample_rate_hz(), duration_seconds);
  std::vector<Sample16> input(count);
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> dist(-8000, 8000);
  for (auto& s : input) s = static_cast<Sample16>(dist(rng));
  return run(config, proc, input).report;
}

}  // namespace rtdsp
