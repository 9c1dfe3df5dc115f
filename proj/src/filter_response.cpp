#include "rtdsp/filter_response.hpp"

#include <cmath>
#include <stdexcept>

namespace rtdsp {

FilterSpec::FilterSpec(FilterKind kind, int order, double cutoff)
    : kind_(kind), order_(order), cutoff_(cutoff) {
  if (order < 1) throw std::invalid_argument("filter order must be at least 1");
  if (!std::isfinite(cutoff) || cutoff <= 0.0) {
    throw std::invalid_argument("cutoff must be positive");
  }
}

double magnitude(const FilterSpec& spec, double w) {
  if (!std::isfinite(w) || w < 0.0) throw std::invalid_argument("frequency must be >= 0");
  double ratio;
  if (spec.kind() == FilterKind::lowpass) {
    ratio = w / spec.cutoff();
  } else {
    if (w == 0.0) return 0.0;
    ratio = spec.cutoff() / w;
  }
  // pow overflows to inf for steep skirts, which correctly yields 0.
  return 1.0 / std::sqrt(1.0 + std::pow(ratio, 2.0 * spec.order()));
}

std::vector<ResponsePoint> response_curve(const FilterSpec& spec, std::span<const double> w_grid) {
  std::vector<ResponsePoint> out;
  out.reserve(w_grid.size());
  for (const double w : w_grid) out.push_back({w, magnitude(spec, w)});
  return out;
}

std::vector<double> integer_grid(int count) {
  std::vector<double> grid;
  for (int w = 0; w < count; ++w) grid.push_back(w);
  return grid;
}

double paper_pow_as_printed(double a, int x) {
  if (x < 1) throw std::invalid_argument("exponent argument must be at least 1");
  for (int i = 0; i < x - 1; ++i) a *= a;
  return a;
}

}  // namespace rtdsp
