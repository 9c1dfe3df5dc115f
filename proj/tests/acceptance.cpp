// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Each criterion also has a wall-clock budget that counts toward pass/fail.

#include <fmt/format.h>

#include <chrono>
#include <functional>
#include <numbers>

#include "cli_support.hpp"
#include "oracles.hpp"
#include "rtdsp/alarm_clock.hpp"
#include "rtdsp/engine.hpp"
#include "rtdsp/filter_response.hpp"
#include "rtdsp/generators.hpp"
#include "rtdsp/kernels.hpp"
#include "rtdsp/wav.hpp"

using namespace rtdsp;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<std::size_t> nonzero(std::span<const Sample16> v) {
  std::vector<std::size_t> idx;
  for (std::size_t n = 0; n < v.size(); ++n)
    if (v[n] != 0) idx.push_back(n);
  return idx;
}

// 1. Loopback identity through the fx subcommand.
Outcome loopback_identity() {
  Outcome o;
  testutil::TempDir dir;
  std::mt19937 rng(1001);
  const char* channels[] = {"left", "right", "downmix"};
  for (int i = 0; i < 10; ++i) {
    const int rate = i % 2 ? 48000 : 8000;
    const std::size_t frames = i == 0 ? 1 : i == 1 ? 100000 : 1 + rng() % 100000;
    const bool stereo = i % 3 != 0;
    const auto clip = stereo ? wav::AudioClip(rate, {oracle::random_samples(rng, frames), oracle::random_samples(rng, frames)})
                             : wav::AudioClip::mono(rate, oracle::random_samples(rng, frames));
    const std::string ch = stereo ? channels[i % 3] : "left";
    const auto in = dir.file(fmt::format("in{}.wav", i)), out = dir.file(fmt::format("out{}.wav", i));
    wav::write_wav_file(in, clip);
    const auto r = testutil::run_cli({"fx", "--effect", "passthrough", "--channel", ch, "--in", in, "--out", out});
    o.require(r.code == 0, fmt::format("clip {}: fx exited {}: {}", i, r.code, r.err));
    if (!o.ok) return o;
    const auto y = wav::read_wav_file(out);
    const auto which = ch == "right" ? wav::ChannelSelect::right
                       : ch == "downmix" ? wav::ChannelSelect::downmix
                                         : wav::ChannelSelect::left;
    const auto expected = wav::select_channel(clip, which);
    o.require(y.sample_rate_hz() == rate, fmt::format("clip {}: rate changed", i));
    o.require(std::equal(expected.begin(), expected.end(), y.channel(0).begin(), y.channel(0).end()),
              fmt::format("clip {} ({} frames, {}): samples differ", i, frames, ch));
  }
  return o;
}

// 2. Delay impulse response against the linear-array oracle.
Outcome delay_impulse() {
  Outcome o;
  const auto in = oracle::impulse(2000, 10000);
  DelayProcessor p(400);
  const auto y = run(CodecConfig(8000, 0, 0, InputSource::mic_in), p, in).output;
  o.require(y == oracle::delay(in, 400), "differs from brute-force simulation");
  o.require(nonzero(y) == std::vector<std::size_t>{0, 400}, "nonzero outside n = 0, 400");
  o.require(y[0] == 10000 && y[400] == 10000, "tap amplitudes not 10000");
  return o;
}

// 3. Echo geometric tail.
Outcome echo_tail() {
  Outcome o;
  const auto in = oracle::impulse(20000, 10000);
  EchoProcessor p(EchoParams(0.6, 4000));
  const auto y = run(CodecConfig(8000, 0, 0, InputSource::mic_in), p, in).output;
  const auto ref = oracle::echo(in, 4000, 0.6);
  const std::size_t taps[] = {0, 4000, 8000, 12000, 16000};
  const int values[] = {10000, 10000, 6000, 3600, 2160};
  for (int k = 0; k < 5; ++k) {
    const auto n = taps[k];
    o.require(std::abs(y[n] - ref[n]) <= 1, fmt::format("tap {} off oracle: {} vs {}", n, y[n], ref[n]));
    o.require(std::abs(y[n] - values[k]) <= 1, fmt::format("tap {} = {}, expected {}", n, y[n], values[k]));
  }
  o.require(nonzero(y) == std::vector<std::size_t>(std::begin(taps), std::end(taps)),
            "nonzero samples outside the tap positions");
  return o;
}

// 4. Echo with zero gain is the delay, on every kernel set.
Outcome echo_delay_degeneracy() {
  Outcome o;
  std::mt19937 rng(1004);
  const std::size_t lengths[] = {1, 3, 400};
  for (auto isa : kernels::available_isas()) {
    kernels::select_isa(isa);
    for (int i = 0; i < 1000; ++i) {
      const std::size_t d = lengths[i % 3];
      const auto in = oracle::random_samples(rng, 1 + rng() % 2000);
      EchoProcessor e(EchoParams(0.0, d));
      DelayProcessor dl(d);
      const CodecConfig cfg(8000);
      o.require(run(cfg, e, in).output == run(cfg, dl, in).output,
                fmt::format("input {} (D={}, {}) differs", i, d, kernels::isa_name(isa)));
    }
  }
  kernels::reset_isa();
  return o;
}

// 5. Half-power invariance and the order-20 LPF shape.
Outcome half_power() {
  Outcome o;
  const double target = 1.0 / std::sqrt(2.0);
  for (int n = 1; n <= 30; ++n) {
    for (double wc : {1.0, 50.0, 1000.0}) {
      for (auto kind : {FilterKind::lowpass, FilterKind::highpass}) {
        const double h = magnitude({kind, n, wc}, wc);
        o.require(std::abs(h - target) < 1e-12, fmt::format("N={} wc={}: |H(wc)| = {:.17g}", n, wc, h));
      }
    }
  }
  const auto curve = response_curve({FilterKind::lowpass, 20, 50.0}, integer_grid(100));
  o.require(curve.front().magnitude == 1.0, "LPF does not start at 1.0");
  for (std::size_t i = 1; i < curve.size(); ++i) {
    o.require(curve[i].magnitude <= curve[i - 1].magnitude, fmt::format("LPF rises at w={}", i));
  }
  return o;
}

// 6. The printed helper's erratum, and the corrected magnitude vs 50-digit arithmetic.
Outcome erratum() {
  Outcome o;
  o.require(paper_pow_as_printed(2, 3) == 16.0, "paper_pow_as_printed(2,3) != 16");
  o.require(paper_pow_as_printed(2, 3) != std::pow(2.0, 3), "helper coincides with 2^3");
  std::mt19937 rng(1006);
  std::uniform_int_distribution<int> orders(1, 30);
  std::uniform_real_distribution<double> cutoffs(0.5, 1000.0), ws(0.0, 2000.0);
  for (int i = 0; i < 1000; ++i) {
    const int n = orders(rng);
    const double wc = cutoffs(rng), w = ws(rng);
    const bool lp = i % 2 == 0;
    const double got = magnitude({lp ? FilterKind::lowpass : FilterKind::highpass, n, wc}, w);
    const double ref = oracle::butterworth(lp, n, wc, w);
    o.require(std::abs(got - ref) < 1e-12, fmt::format("N={} wc={} w={}: {:.17g} vs {:.17g}", n, wc, w, got, ref));
  }
  return o;
}

// 7. Sine buffer with the 3.14 constant.
Outcome sine_fidelity() {
  Outcome o;
  const auto paper = gen_sine({100, 1.0, 1.0, PiMode::paper_3_14});
  const auto exact = gen_sine({100, 1.0, 1.0, PiMode::exact});
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const oracle::BigFloat arg = oracle::BigFloat(2) * oracle::BigFloat("3.14") * i / 100;
    const double ref = boost::multiprecision::sin(arg).convert_to<double>();
    o.require(std::abs(paper[i] - ref) < 1e-6, fmt::format("i={}: {} vs {}", i, paper[i], ref));
    worst = std::max(worst, std::abs(paper[i] - exact[i]));
  }
  o.require(worst < 0.004, fmt::format("max |3.14 - pi| deviation {}", worst));
  return o;
}

// 8. WAV round trips in both directions.
Outcome wav_round_trip() {
  Outcome o;
  std::mt19937 rng(1008);
  std::vector<wav::AudioClip> clips;
  for (int i = 0; i < 20; ++i) {
    const int rate = i % 2 ? 48000 : 8000;
    const std::size_t frames = rng() % 20000;
    if (i % 3 == 0) {
      clips.push_back(wav::AudioClip::mono(rate, oracle::random_samples(rng, frames)));
    } else {
      clips.emplace_back(rate, std::vector<std::vector<Sample16>>{oracle::random_samples(rng, frames),
                                                                  oracle::random_samples(rng, frames)});
    }
  }
  clips.push_back(wav::AudioClip::mono(8000, {}));
  clips.push_back(wav::AudioClip(48000, {{}, {}}));
  clips.push_back(wav::AudioClip::mono(48000, {32767, -32768, 32767, -32768}));
  clips.push_back(wav::AudioClip(8000, {{-32768, 32767}, {32767, -32768}}));
  for (std::size_t i = 0; i < clips.size(); ++i) {
    const auto bytes = wav::write_wav(clips[i]);
    const auto back = wav::read_wav(bytes);
    o.require(back == clips[i], fmt::format("clip {}: read(write(c)) != c", i));
    o.require(wav::write_wav(back) == bytes, fmt::format("clip {}: write(read(b)) != b", i));
  }
  return o;
}

// 9. Clock laws.
Outcome clock_laws() {
  Outcome o;
  using namespace rtdsp::clock;
  const ClockState start({6, 30, 0}, 3, Alarm{{7, 0, 0}, "alarm"});
  ClockState s = start;
  for (int i = 0; i < kSecondsPerDay; ++i) s = tick(s);
  o.require(s.time() == start.time() && s.day_of_week() == 4, "86400 ticks did not advance exactly one day");
  const auto week = run_clock(start, DriftModel(), 7ull * kSecondsPerDay);
  o.require(week.final_state == start, "604800 ticks are not the identity");
  o.require(week.events.size() == 7, fmt::format("{} alarms in 7 days", week.events.size()));
  for (std::size_t d = 0; d < week.events.size(); ++d) {
    const auto& e = week.events[d];
    o.require(e.tick_index == 1800 + d * kSecondsPerDay, fmt::format("alarm {} at tick {}", d, e.tick_index));
  }
  const double interval = compensated_tick_interval(DriftModel(19.2));
  o.require(std::abs(interval - (1.0 + 19.2 / 86400.0)) < 1e-12, fmt::format("interval {:.17g}", interval));
  return o;
}

// 10. Throughput via the bench subcommand.
Outcome throughput() {
  Outcome o;
  const auto r = testutil::run_cli({"bench", "--effect", "echo", "--fs", "48000", "--seconds", "60"});
  o.require(r.code == 0, "bench failed: " + r.err);
  if (!o.ok) return o;
  const auto rows = testutil::lines(r.out);
  o.require(rows.size() == 2, "unexpected bench output");
  if (!o.ok) return o;
  const std::string& row = rows[1];
  const double rtf = std::stod(row.substr(row.rfind(',') + 1));
  o.require(row.find(",2880000,") != std::string::npos, "sample count is not 2880000");
  o.require(rtf < 0.5, fmt::format("real_time_factor {} >= 0.5", rtf));
  o.detail = o.ok ? fmt::format("real_time_factor={:.6f}", rtf) : o.detail;
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "loopback identity, 10 random WAV clips", 5.0, loopback_identity},
      {2, "delay impulse response, D=400", 1.0, delay_impulse},
      {3, "echo geometric tail, D=4000 gain=0.6", 1.0, echo_tail},
      {4, "echo gain 0 equals delay, D in {1,3,400}", 5.0, echo_delay_degeneracy},
      {5, "half-power invariance and LPF shape", 1.0, half_power},
      {6, "power-helper erratum and 1e-12 magnitude", 1.0, erratum},
      {7, "sine fidelity with pi = 3.14", 1.0, sine_fidelity},
      {8, "WAV round trip", 2.0, wav_round_trip},
      {9, "clock laws and drift interval", 5.0, clock_laws},
      {10, "echo throughput at 48 kHz, RTF < 0.5", 30.0, throughput},
  };
  fmt::print("kernels: {}\n", kernels::isa_name(kernels::active().isa));
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs >= c.budget_seconds) {
      o.ok = false;
      o.detail = fmt::format("over time budget of {} s", c.budget_seconds);
    }
    failures += !o.ok;
    fmt::print("[{}] AC{:<2} {} ({:.3f} s / {} s){}\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
               c.budget_seconds, o.detail.empty() ? "" : ": " + o.detail);
  }
  fmt::print("{} of {} criteria passed\n", std::size(criteria) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
