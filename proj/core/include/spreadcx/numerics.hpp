#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spreadcx/errors.hpp"

namespace spreadcx {

inline constexpr double kPi = 3.14159265358979323846;

/// Uniform composite-Simpson grid on [0, pi].
class MomentumGrid {
 public:
  static constexpr int kDefaultIntervals = 1000;

  /// n_intervals must be even and positive.
  explicit MomentumGrid(int n_intervals = kDefaultIntervals);

  int n_intervals() const noexcept { return n_intervals_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  double step() const noexcept { return kPi / n_intervals_; }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  /// Simpson weights already multiplied by step/3; they sum to pi.
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  int n_intervals_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Composite Simpson-1/3 weights for n (even) intervals of width h.
std::vector<double> simpson_weights(int n_intervals, double h);

/// Simpson estimate of the integral of f over [0, pi]. The sum runs in node
/// order, so results are reproducible bit for bit.
template <class F>
double simpson_integrate(F&& f, const MomentumGrid& grid) {
  const auto& k = grid.nodes();
  const auto& w = grid.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double v = f(k[i]);
    if (!std::isfinite(v))
      throw NumericalError("non-finite integrand at node " + std::to_string(i) +
                               " (k = " + std::to_string(k[i]) + ")",
                           i, k[i]);
    sum += w[i] * v;
  }
  return sum;
}

/// Weighted sum of pre-sampled integrand values on a grid.
double simpson_sum(std::span<const double> samples, const MomentumGrid& grid);

/// Simpson integral of f over [a, b] with an even number of intervals.
template <class F>
double simpson_uniform(F&& f, double a, double b, int n_intervals) {
  if (n_intervals <= 0 || n_intervals % 2 != 0)
    throw DomainError("Simpson rule needs a positive even number of intervals");
  const double h = (b - a) / n_intervals;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < n_intervals; ++i) {
    const double v = f(a + i * h);
    if (!std::isfinite(v))
      throw NumericalError("non-finite integrand at node " + std::to_string(i), i, a + i * h);
    (i % 2 ? odd : even) += v;
  }
  const double fa = f(a), fb = f(b);
  if (!std::isfinite(fa) || !std::isfinite(fb))
    throw NumericalError("non-finite integrand at an end point", 0, a);
  return h / 3.0 * (fa + fb + 4.0 * odd + 2.0 * even);
}

/// Integral of a T-periodic f over n_periods periods: n_periods times the
/// Simpson integral over one period.
template <class F>
double integrate_time_periodic(F&& f, double period, int n_periods, int steps_per_period) {
  if (n_periods < 0) throw DomainError("number of periods must be >= 0");
  if (n_periods == 0) return 0.0;
  return n_periods * simpson_uniform(f, 0.0, period, steps_per_period);
}

/// Complete elliptic integral of the first kind K(m), m = k^2, by the
/// arithmetic-geometric mean. Domain 0 <= m < 1 - 1e-12.
double elliptic_k(double m);

/// Complete elliptic integral of the second kind E(m), 0 <= m <= 1.
double elliptic_e(double m);

/// Centered first differences; the two end points use second-order one-sided stencils.
std::vector<double> centered_derivative(std::span<const double> values, double step);

/// Centered second differences; end points copy the one-sided three-point value.
std::vector<double> second_difference(std::span<const double> values, double step);

/// A uniform parameter axis from..to (inclusive) in increments of step.
struct AxisRange {
  double from = 0.0;
  double to = 0.0;
  double step = 0.01;

  std::vector<double> values() const;
};

struct SweepResult {
  std::string axis_name;
  std::vector<double> axis;
  std::vector<double> value;
  std::vector<double> derivative;

  double step() const noexcept { return axis.size() > 1 ? axis[1] - axis[0] : 0.0; }
};

/// Fills derivative from value by centered differences.
SweepResult make_sweep(std::string axis_name, std::vector<double> axis, std::vector<double> value);

enum class PeakSource {
  value,           // maxima of the swept observable
  abs_derivative,  // maxima of |d value / d axis|
  abs_curvature,   // maxima of |d^2 value / d axis^2| (kinks, derivative jumps)
};

struct PeakOptions {
  PeakSource source = PeakSource::abs_derivative;
  double min_prominence = 0.0;
  /// Of two maxima closer than this (axis units) only the higher survives.
  double min_separation = 0.0;
};

struct Peak {
  std::size_t index = 0;
  double position = 0.0;
  double height = 0.0;
  double prominence = 0.0;
};

/// Interior local maxima of the selected signal whose topographic prominence
/// reaches min_prominence, sorted by position.
std::vector<Peak> find_peaks(const SweepResult& sweep, const PeakOptions& options);

std::vector<double> find_peaks(const SweepResult& sweep, double min_prominence,
                               PeakSource source = PeakSource::abs_derivative);

/// Number of worker threads used by the sweep and curve drivers. 0 selects
/// SPREADCX_THREADS from the environment, falling back to the hardware count.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs body(i) for i in [0, n). Each index must write only its own output
/// slot; the first exception thrown by any index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace spreadcx
