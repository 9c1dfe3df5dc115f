#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rtdsp/codec.hpp"
#include "rtdsp/effects.hpp"

namespace rtdsp {

/// A per-sample transform with private state, invoked once per codec interrupt.
class SampleProcessor {
 public:
  virtual ~SampleProcessor() = default;

  virtual Sample16 process(Sample16 input) = 0;

  /// Must equal calling process() on each sample in order. `out` may alias `in`.
  virtual void process_block(std::span<const Sample16> in, std::span<Sample16> out);

  /// Back to the power-on state.
  virtual void reset() = 0;

  virtual std::unique_ptr<SampleProcessor> clone() const = 0;
};

class PassthroughProcessor final : public SampleProcessor {
 public:
  Sample16 process(Sample16 input) override { return passthrough(input); }
  void process_block(std::span<const Sample16> in, std::span<Sample16> out) override;
  void reset() override {}
  std::unique_ptr<SampleProcessor> clone() const override;
};

class DelayProcessor final : public SampleProcessor {
 public:
  explicit DelayProcessor(std::size_t length = kDefaultDelayLength) : line_(length) {}

  Sample16 process(Sample16 input) override { return delay_step(line_, input); }
  void process_block(std::span<const Sample16> in, std::span<Sample16> out) override {
    delay_block(line_, in, out);
  }
  void reset() override { line_.clear(); }
  std::unique_ptr<SampleProcessor> clone() const override;

  const DelayLine& line() const noexcept { return line_; }

 private:
  DelayLine line_;
};

class EchoProcessor final : public SampleProcessor {
 public:
  explicit EchoProcessor(EchoParams params = {kDefaultEchoGain, kDefaultEchoLength})
      : params_(params), line_(params.delay_len()) {}

  Sample16 process(Sample16 input) override { return echo_step(line_, params_, input); }
  void process_block(std::span<const Sample16> in, std::span<Sample16> out) override {
    echo_block(line_, params_, in, out);
  }
  void reset() override { line_.clear(); }
  std::unique_ptr<SampleProcessor> clone() const override;

  const DelayLine& line() const noexcept { return line_; }
  const EchoParams& params() const noexcept { return params_; }

 private:
  EchoParams params_;
  DelayLine line_;
};

enum class Effect { passthrough, delay, echo };

std::optional<Effect> parse_effect(std::string_view name) noexcept;
std::string_view effect_name(Effect e) noexcept;

/// Sample rate each board program initialised its codec with.
int default_sample_rate(Effect e) noexcept;

/// `buf_size` is ignored for passthrough; `gain` is used by echo only.
std::unique_ptr<SampleProcessor> make_processor(Effect e, std::size_t buf_size, double gain);

struct EngineReport {
  std::uint64_t samples_processed = 0;
  double wall_seconds = 0.0;
  /// wall_seconds divided by the audio duration; 0 when nothing was processed.
  double real_time_factor = 0.0;
};

struct RunResult {
  std::vector<Sample16> output;
  EngineReport report;
};

/// Streams `input` through ADC gain, the processor and DAC attenuation, one
/// interrupt period (block) at a time. The processor's state carries over.
RunResult run(const CodecConfig& config, SampleProcessor& proc, std::span<const Sample16> input);

/// Reference path: one process() call per sample, scalar gain arithmetic.
RunResult run_per_sample(const CodecConfig& config, SampleProcessor& proc,
                         std::span<const Sample16> input);

/// Times `run` over duration_seconds of deterministic pseudo-random input.
/// Throws std::invalid_argument unless duration_seconds is finite and > 0.
EngineReport measure_rtf(const CodecConfig& config, SampleProcessor& proc, double duration_seconds);

/// Samples in `seconds` of audio at `sample_rate_hz`, rounded to nearest.
std::uint64_t sample_count(int sample_rate_hz, double seconds);

inline constexpr std::size_t kInterruptBlock = 1024;

}  // namespace rtdsp
