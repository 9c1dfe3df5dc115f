#pragma once

#include <span>
#include <utility>
#include <vector>

namespace rtdsp {

enum class FilterKind { lowpass, highpass };

/// Butterworth-form magnitude specification. order >= 1, cutoff > 0.
class FilterSpec {
 public:
  /// Throws std::invalid_argument on order < 1 or a non-positive/non-finite cutoff.
  FilterSpec(FilterKind kind, int order, double cutoff);

  FilterKind kind() const noexcept { return kind_; }
  int order() const noexcept { return order_; }
  double cutoff() const noexcept { return cutoff_; }

 private:
  FilterKind kind_;
  int order_;
  double cutoff_;
};

/// |H(w)| of an order-N Butterworth response:
///   lowpass  1 / sqrt(1 + (w/wc)^(2N))
///   highpass 1 / sqrt(1 + (wc/w)^(2N)), and 0 at w = 0.
/// Throws std::invalid_argument for negative or non-finite w.
double magnitude(const FilterSpec& spec, double w);

struct ResponsePoint {
  double w;
  double magnitude;
};

std::vector<ResponsePoint> response_curve(const FilterSpec& spec, std::span<const double> w_grid);

/// Integer grid 0, 1, ..., count - 1 (the demo plots 0..99).
std::vector<double> integer_grid(int count = 100);

/// The demo program's power helper, kept verbatim: squares `a` (x - 1) times,
/// so it returns a^(2^(x-1)) rather than a^x. Throws std::invalid_argument for x < 1.
double paper_pow_as_printed(double a, int x);

}  // namespace rtdsp
