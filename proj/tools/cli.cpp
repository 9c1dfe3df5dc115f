#include "cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "rtdsp/alarm_clock.hpp"
#include "rtdsp/engine.hpp"
#include "rtdsp/filter_response.hpp"
#include "rtdsp/generators.hpp"
#include "rtdsp/kernels.hpp"
#include "rtdsp/wav.hpp"

namespace rtdsp::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, else to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot create " + path);
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }
  void finish() {
    os_->flush();
    if (!*os_) throw std::runtime_error("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

// ---------------------------------------------------------------- gen-sine

struct SineOpts {
  long long samples = 100;
  double cycles = 1.0;
  double amplitude = 1.0;
  bool paper_pi = false;
  std::string out;
};

void add_gen_sine(CLI::App& app, SineOpts& o) {
  auto* sub = app.add_subcommand("gen-sine", "Generate one buffer of a sine wave as index,value CSV");
  sub->add_option("--samples", o.samples, "Buffer length")->capture_default_str();
  sub->add_option("--cycles", o.cycles, "Cycles over the whole buffer")->capture_default_str();
  sub->add_option("--amplitude", o.amplitude, "Peak value")->capture_default_str();
  sub->add_flag("--paper-pi", o.paper_pi, "Use 3.14 for pi, as the board demo did");
  sub->add_option("--out", o.out, "CSV path (default: stdout)");
}

int cmd_gen_sine(const SineOpts& o, std::ostream& out) {
  if (o.samples < 1) throw UsageError("--samples must be at least 1");
  if (!(o.cycles > 0.0)) throw UsageError("--cycles must be positive");
  if (!(o.amplitude > 0.0)) throw UsageError("--amplitude must be positive");
  const auto y = gen_sine({std::size_t(o.samples), o.cycles, o.amplitude,
                           o.paper_pi ? PiMode::paper_3_14 : PiMode::exact});
  Sink sink(o.out, out);
  auto& os = sink.stream();
  os << "index,value\n";
  for (std::size_t i = 0; i < y.size(); ++i) fmt::print(os, "{},{}\n", i, y[i]);
  sink.finish();
  return kExitOk;
}

// --------------------------------------------------------- filter-response

struct FilterOpts {
  std::string kind;
  int order = 0;
  double cutoff = 0.0;
  int wmax = 100;
  std::string out;
};

void add_filter(CLI::App& app, FilterOpts& o) {
  auto* sub = app.add_subcommand("filter-response", "Butterworth magnitude over w = 0..wmax-1 as w,H CSV");
  sub->add_option("--kind", o.kind, "lpf or hpf")->required()->check(CLI::IsMember({"lpf", "hpf"}));
  sub->add_option("--order", o.order, "Filter order N")->required();
  sub->add_option("--cutoff", o.cutoff, "Cutoff wc, in grid units")->required();
  sub->add_option("--wmax", o.wmax, "Grid size")->capture_default_str();
  sub->add_option("--out", o.out, "CSV path (default: stdout)");
}

int cmd_filter(const FilterOpts& o, std::ostream& out) {
  if (o.order < 1) throw UsageError("--order must be at least 1");
  if (!(o.cutoff > 0.0) || !std::isfinite(o.cutoff)) throw UsageError("--cutoff must be positive");
  if (o.wmax < 1) throw UsageError("--wmax must be at least 1");
  const FilterSpec spec(o.kind == "lpf" ? FilterKind::lowpass : FilterKind::highpass, o.order, o.cutoff);
  const auto grid = integer_grid(o.wmax);
  Sink sink(o.out, out);
  auto& os = sink.stream();
  os << "w,H\n";
  for (const auto& p : response_curve(spec, grid)) fmt::print(os, "{},{}\n", p.w, p.magnitude);
  sink.finish();
  return kExitOk;
}

// ---------------------------------------------------------------------- fx

struct FxOpts {
  std::string effect;
  std::string in;
  std::string out;
  std::optional<std::size_t> buf_size;
  double gain = kDefaultEchoGain;
  std::optional<int> fs;
  std::string channel = "left";
  double adc_gain_db = 0.0;
  double dac_atten_db = 0.0;
};

void add_fx(CLI::App& app, FxOpts& o) {
  auto* sub = app.add_subcommand("fx", "Run a real-time effect over a WAV file");
  sub->add_option("--effect", o.effect, "passthrough, delay or echo")
      ->required()
      ->check(CLI::IsMember({"passthrough", "loopback", "delay", "echo"}));
  sub->add_option("--in", o.in, "Input WAV (PCM-16)")->required();
  sub->add_option("--out", o.out, "Output WAV")->required();
  sub->add_option("--buf-size", o.buf_size, "Delay line length in samples (delay, echo)");
  sub->add_option("--gain", o.gain, "Echo feedback gain in [0, 1)")->capture_default_str();
  sub->add_option("--fs", o.fs, "Codec sample rate (default: the input file's)");
  sub->add_option("--channel", o.channel, "left, right or downmix")
      ->capture_default_str()
      ->check(CLI::IsMember({"left", "right", "downmix"}));
  sub->add_option("--adc-gain-db", o.adc_gain_db, "ADC gain")->capture_default_str();
  sub->add_option("--dac-atten-db", o.dac_atten_db, "DAC attenuation")->capture_default_str();
}

wav::ChannelSelect parse_channel(const std::string& s) {
  if (s == "right") return wav::ChannelSelect::right;
  if (s == "downmix") return wav::ChannelSelect::downmix;
  return wav::ChannelSelect::left;
}

void print_report(std::ostream& err, std::string_view what, const EngineReport& r) {
  fmt::print(err, "{}: samples_processed={} wall_seconds={:.6f} real_time_factor={:.6f}\n", what,
             r.samples_processed, r.wall_seconds, r.real_time_factor);
}

int cmd_fx(const FxOpts& o, std::ostream& err) {
  const Effect effect = *parse_effect(o.effect);
  if (effect != Effect::passthrough && !o.buf_size) {
    throw UsageError("--buf-size is required for --effect " + o.effect);
  }
  if (o.buf_size && *o.buf_size == 0) throw UsageError("--buf-size must be at least 1");
  if (effect == Effect::echo && !(o.gain >= 0.0 && o.gain < 1.0)) {
    throw UsageError("--gain must be in [0, 1)");
  }
  const auto clip = wav::read_wav_file(o.in);
  const auto which = parse_channel(o.channel);
  if (which == wav::ChannelSelect::right && clip.channels() < 2) {
    throw UsageError("--channel right needs a stereo input");
  }
  const int fs = o.fs.value_or(clip.sample_rate_hz());
  if (!CodecConfig::is_supported_rate(fs)) {
    if (o.fs) throw UsageError(fmt::format("--fs {} is not a supported codec rate", fs));
    throw std::runtime_error(fmt::format("input rate {} Hz is not a supported codec rate; pass --fs", fs));
  }
  CodecConfig config = [&] {
    try {
      return CodecConfig(fs, o.adc_gain_db, o.dac_atten_db);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const auto input = wav::select_channel(clip, which);
  auto proc = make_processor(effect, o.buf_size.value_or(1), o.gain);
  auto result = run(config, *proc, input);
  wav::write_wav_file(o.out, wav::AudioClip::mono(clip.sample_rate_hz(), std::move(result.output)));
  print_report(err, fmt::format("fx {} fs={}", effect_name(effect), fs), result.report);
  return kExitOk;
}

// ------------------------------------------------------------------- clock

struct ClockOpts {
  std::string time;
  int day = 0;
  std::string alarm;
  std::optional<std::string> message;
  double drift = 19.2;
  std::optional<long long> simulate_ticks;
  std::optional<long long> run_ticks;
  bool events_only = false;
};

void add_clock(CLI::App& app, ClockOpts& o) {
  auto* sub = app.add_subcommand("clock", "Digital alarm clock with weekday rollover");
  sub->add_option("--time", o.time, "Start time HH:MM:SS")->required();
  sub->add_option("--day", o.day, "Day of week, Sunday = 1")->required();
  sub->add_option("--alarm", o.alarm, "Daily alarm time HH:MM:SS");
  sub->add_option("--message", o.message, "Alarm message");
  sub->add_option("--drift", o.drift, "Processor clock gain, seconds per day")->capture_default_str();
  sub->add_option("--simulate-ticks", o.simulate_ticks, "Print this many ticks immediately, no waiting");
  sub->add_option("--run-ticks", o.run_ticks, "Real-time mode: stop after this many ticks");
  sub->add_flag("--events-only", o.events_only, "Print alarm events but not every tick");
}

volatile std::sig_atomic_t g_stop = 0;
extern "C" void on_stop_signal(int) { g_stop = 1; }

void print_state(std::ostream& os, std::string_view label, std::uint64_t k, const clock::ClockState& s) {
  fmt::print(os, "{} {} {} day {}\n", label, k, clock::format_time(s.time()), s.day_of_week());
}

int cmd_clock(const ClockOpts& o, std::ostream& out) {
  const auto start = clock::parse_time(o.time);
  if (!start) throw UsageError("--time must be HH:MM:SS within a day");
  if (o.day < 1 || o.day > 7) throw UsageError("--day must be 1..7 (Sunday = 1)");
  std::optional<clock::Alarm> alarm;
  if (!o.alarm.empty()) {
    const auto at = clock::parse_time(o.alarm);
    if (!at) throw UsageError("--alarm must be HH:MM:SS within a day");
    alarm = clock::Alarm{*at, o.message.value_or("ALARM")};
  } else if (o.message) {
    throw UsageError("--message needs --alarm");
  }
  if (!(o.drift >= 0.0 && o.drift < clock::kSecondsPerDay)) {
    throw UsageError("--drift must be in [0, 86400)");
  }
  if (o.simulate_ticks && *o.simulate_ticks < 0) throw UsageError("--simulate-ticks must be >= 0");
  if (o.run_ticks && *o.run_ticks < 0) throw UsageError("--run-ticks must be >= 0");
  if (o.simulate_ticks && o.run_ticks) throw UsageError("--run-ticks only applies to real-time mode");

  const clock::DriftModel drift(o.drift);
  clock::ClockState state(*start, o.day, alarm);
  print_state(out, "start", 0, state);

  auto step = [&](std::uint64_t k) {
    state = clock::tick(state);
    if (!o.events_only) print_state(out, "tick", k, state);
    if (auto msg = clock::check_alarm(state)) {
      fmt::print(out, "alarm {} {} day {} {}\n", k, clock::format_time(state.time()),
                 state.day_of_week(), *msg);
    }
  };

  if (o.simulate_ticks) {
    for (std::uint64_t k = 1; k <= std::uint64_t(*o.simulate_ticks); ++k) step(k);
    out.flush();
    return kExitOk;
  }

  g_stop = 0;
  auto prev_int = std::signal(SIGINT, on_stop_signal);
  auto prev_term = std::signal(SIGTERM, on_stop_signal);
  using Clock = std::chrono::steady_clock;
  const auto interval = std::chrono::duration_cast<Clock::duration>(
      std::chrono::duration<double>(clock::compensated_tick_interval(drift)));
  auto deadline = Clock::now();
  for (std::uint64_t k = 1; !o.run_ticks || k <= std::uint64_t(*o.run_ticks); ++k) {
    deadline += interval;
    while (!g_stop && Clock::now() < deadline) {
      std::this_thread::sleep_until(std::min(deadline, Clock::now() + std::chrono::milliseconds(100)));
    }
    if (g_stop) break;
    step(k);
    out.flush();
  }
  std::signal(SIGINT, prev_int);
  std::signal(SIGTERM, prev_term);
  return kExitOk;
}

// ------------------------------------------------------------------- bench

struct BenchOpts {
  std::string effect = "echo";
  int fs = 48000;
  double seconds = 60.0;
  std::size_t buf_size = kDefaultEchoLength;
  double gain = kDefaultEchoGain;
  std::string isa = "auto";
};

void add_bench(CLI::App& app, BenchOpts& o) {
  auto* sub = app.add_subcommand("bench", "Measure the real-time factor of an effect");
  sub->add_option("--effect", o.effect, "passthrough, delay or echo")
      ->capture_default_str()
      ->check(CLI::IsMember({"passthrough", "loopback", "delay", "echo"}));
  sub->add_option("--fs", o.fs, "Codec sample rate")->capture_default_str();
  sub->add_option("--seconds", o.seconds, "Audio duration to process")->capture_default_str();
  sub->add_option("--buf-size", o.buf_size, "Delay line length in samples")->capture_default_str();
  sub->add_option("--gain", o.gain, "Echo feedback gain")->capture_default_str();
  sub->add_option("--isa", o.isa, "Kernel set: auto, scalar, avx2, neon")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));
}

int cmd_bench(const BenchOpts& o, std::ostream& out, std::ostream& err) {
  const Effect effect = *parse_effect(o.effect);
  if (!std::isfinite(o.seconds) || o.seconds <= 0.0) throw UsageError("--seconds must be positive");
  if (!CodecConfig::is_supported_rate(o.fs)) throw UsageError(fmt::format("--fs {} is not supported", o.fs));
  if (o.buf_size == 0) throw UsageError("--buf-size must be at least 1");
  if (effect == Effect::echo && !(o.gain >= 0.0 && o.gain < 1.0)) throw UsageError("--gain must be in [0, 1)");

  struct IsaGuard {
    ~IsaGuard() { kernels::reset_isa(); }
  } guard;
  if (o.isa != "auto") {
    const auto isa = o.isa == "scalar" ? kernels::Isa::scalar
                     : o.isa == "avx2" ? kernels::Isa::avx2
                                       : kernels::Isa::neon;
    try {
      kernels::select_isa(isa);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const std::string_view isa = kernels::isa_name(kernels::active().isa);

  const CodecConfig config(o.fs);
  auto proc = make_processor(effect, o.buf_size, o.gain);
  const auto report = measure_rtf(config, *proc, o.seconds);
  print_report(err, fmt::format("bench {} fs={} isa={}", effect_name(effect), o.fs, isa), report);
  out << "effect,fs,seconds,isa,samples_processed,wall_seconds,real_time_factor\n";
  fmt::print(out, "{},{},{},{},{},{:.9f},{:.9f}\n", effect_name(effect), o.fs, o.seconds, isa,
             report.samples_processed, report.wall_seconds, report.real_time_factor);
  out.flush();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Software model of an interrupt-driven audio DSP board"};
  app.name("rtdsp");
  app.require_subcommand(1, 1);

  SineOpts sine;
  FilterOpts filter;
  FxOpts fx;
  ClockOpts clk;
  BenchOpts bench;
  add_gen_sine(app, sine);
  add_filter(app, filter);
  add_fx(app, fx);
  add_clock(app, clk);
  add_bench(app, bench);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "gen-sine") return cmd_gen_sine(sine, out);
    if (name == "filter-response") return cmd_filter(filter, out);
    if (name == "fx") return cmd_fx(fx, err);
    if (name == "clock") return cmd_clock(clk, out);
    if (name == "bench") return cmd_bench(bench, out, err);
  } catch (const UsageError& e) {
    fmt::print(err, "rtdsp {}: {}\n", name, e.what());
    return kExitUsage;
  } catch (const wav::WavError& e) {
    fmt::print(err, "rtdsp {}: {}: {}\n", name, wav::error_kind_name(e.kind()), e.what());
    return kExitFailure;
  } catch (const std::exception& e) {
    fmt::print(err, "rtdsp {}: {}\n", name, e.what());
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace rtdsp::cli
