#include "rtdsp/alarm_clock.hpp"

#include <stdexcept>

#include <cstdio>

namespace rtdsp::clock {

bool TimeOfDay::valid() const noexcept {
  return hour >= 0 && hour < 24 && minute >= 0 && minute < 60 && second >= 0 && second < 60;
}

std::optional<TimeOfDay> parse_time(std::string_view text) {
  if (text.size() != 8 || text[2] != ':' || text[5] != ':') return std::nullopt;
  auto two = [&](std::size_t at) -> int {
    const char a = text[at], b = text[at + 1];
    if (a < '0' || a > '9' || b < '0' || b > '9') return -1;
    return (a - '0') * 10 + (b - '0');
  };
  TimeOfDay t{two(0), two(3), two(6)};
  if (!t.valid()) return std::nullopt;
  return t;
}

std::string format_time(const TimeOfDay& t) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d:%02d:%02d", t.hour, t.minute, t.second);
  return buf;
}

ClockState::ClockState(TimeOfDay time, int day_of_week, std::optional<Alarm> alarm)
    : time_(time), day_(day_of_week), alarm_(std::move(alarm)) {
  if (!time_.valid()) throw std::invalid_argument("time of day out of range");
  if (day_ < 1 || day_ > 7) throw std::invalid_argument("day of week must be 1..7");
  if (alarm_ && !alarm_->at.valid()) throw std::invalid_argument("alarm time out of range");
}

DriftModel::DriftModel(double seconds_fast_per_day) : fast_(seconds_fast_per_day) {
  if (!(seconds_fast_per_day >= 0.0 && seconds_fast_per_day < kSecondsPerDay)) {
    throw std::invalid_argument("drift must be in [0, 86400) seconds per day");
  }
}

ClockState tick(const ClockState& state) {
  ClockState next = state;
  TimeOfDay& t = next.time_;
  if (++t.second < 60) return next;
  t.second = 0;
  if (++t.minute < 60) return next;
  t.minute = 0;
  if (++t.hour < 24) return next;
  t.hour = 0;
  next.day_ = next.day_ == 7 ? 1 : next.day_ + 1;
  return next;
}

std::optional<std::string> check_alarm(const ClockState& state) {
  if (state.alarm() && state.alarm()->at == state.time()) return state.alarm()->message;
  return std::nullopt;
}

double compensated_tick_interval(const DriftModel& drift) noexcept {
  return 1.0 + drift.seconds_fast_per_day() / kSecondsPerDay;
}

ClockRun run_clock(const ClockState& initial, const DriftModel& drift, std::uint64_t n_ticks) {
  ClockRun out{initial, {}, double(n_ticks) * compensated_tick_interval(drift)};
  for (std::uint64_t k = 1; k <= n_ticks; ++k) {
    out.final_state = tick(out.final_state);
    if (auto msg = check_alarm(out.final_state)) {
      out.events.push_back({k, out.final_state.time(), out.final_state.day_of_week(), std::move(*msg)});
    }
  }
  return out;
}

}  // namespace rtdsp::clock
