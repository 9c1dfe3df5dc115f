#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rtdsp::clock {

inline constexpr int kSecondsPerDay = 86400;

struct TimeOfDay {
  int hour = 0;
  int minute = 0;
  int second = 0;

  bool valid() const noexcept;
  int seconds_since_midnight() const noexcept { return hour * 3600 + minute * 60 + second; }

  friend bool operator==(const TimeOfDay&, const TimeOfDay&) = default;
};

/// Parses "HH:MM:SS" (two digits each). Returns nullopt on bad syntax or range.
std::optional<TimeOfDay> parse_time(std::string_view text);
std::string format_time(const TimeOfDay& t);

/// Daily alarm: matches on time of day only, whatever the weekday.
struct Alarm {
  TimeOfDay at;
  std::string message;

  friend bool operator==(const Alarm&, const Alarm&) = default;
};

/// Displayed clock. day_of_week runs 1..7 with Sunday = 1.
class ClockState {
 public:
  /// Throws std::invalid_argument if any field is out of range.
  ClockState(TimeOfDay time, int day_of_week, std::optional<Alarm> alarm = std::nullopt);

  const TimeOfDay& time() const noexcept { return time_; }
  int day_of_week() const noexcept { return day_; }
  const std::optional<Alarm>& alarm() const noexcept { return alarm_; }

  friend bool operator==(const ClockState&, const ClockState&) = default;

 private:
  friend ClockState tick(const ClockState& state);

  TimeOfDay time_;
  int day_;
  std::optional<Alarm> alarm_;
};

/// How fast the processor's own timebase runs against true time.
class DriftModel {
 public:
  /// Throws std::invalid_argument unless 0 <= seconds_fast_per_day < 86400.
  explicit DriftModel(double seconds_fast_per_day = 19.2);
  double seconds_fast_per_day() const noexcept { return fast_; }

 private:
  double fast_;
};

/// Advances one second; midnight increments the weekday, Saturday (7) wraps to Sunday (1).
ClockState tick(const ClockState& state);

/// The alarm message if the displayed time equals the alarm time.
std::optional<std::string> check_alarm(const ClockState& state);

/// Processor-time seconds to wait per displayed second: 1 + fast/86400.
double compensated_tick_interval(const DriftModel& drift) noexcept;

struct AlarmEvent {
  std::uint64_t tick_index;  // 1-based: the alarm fired after this many ticks
  TimeOfDay time;
  int day_of_week;
  std::string message;

  friend bool operator==(const AlarmEvent&, const AlarmEvent&) = default;
};

struct ClockRun {
  ClockState final_state;
  std::vector<AlarmEvent> events;
  double processor_seconds;  // n_ticks * compensated interval
};

/// Applies `n_ticks` ticks, checking the alarm after each one.
ClockRun run_clock(const ClockState& initial, const DriftModel& drift, std::uint64_t n_ticks);

}  // namespace rtdsp::clock
