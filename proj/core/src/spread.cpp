#include "spreadcx/spread.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spreadcx/errors.hpp"

namespace spreadcx {

double ground_state_mode_complexity(ModelKind kind, const BlochComponents& mode) noexcept {
  const double half = 0.5 * mode.phi;
  if (kind == ModelKind::ssh) {
    const double s = std::sin(half);
    return s * s;
  }
  const double c = std::cos(half);
  return c * c;
}

double ground_state_complexity(const ModelParams& params, const MomentumGrid& grid) {
  validate(params);
  const ModelKind kind = kind_of(params);
  const double integral = simpson_integrate(
      [&](double k) { return ground_state_mode_complexity(kind, components(params, k)); }, grid);
  return measure_prefactor(kind) * integral;
}

SweepResult complexity_derivative_sweep(const ModelParams& base, std::string_view axis,
                                        const AxisRange& range, const MomentumGrid& grid) {
  get_parameter(base, axis);  // rejects unknown axis names up front
  auto xs = range.values();
  std::vector<double> values(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    values[i] = ground_state_complexity(with_parameter(base, axis, xs[i]), grid);
  });
  return make_sweep(std::string(axis), std::move(xs), std::move(values));
}

QuenchSchedule QuenchSchedule::single(const ModelParams& initial, const ModelParams& final_params,
                                      double duration) {
  return QuenchSchedule{initial, {QuenchSegment{final_params, duration}}};
}

double QuenchSchedule::total_duration() const noexcept {
  double total = 0.0;
  for (const auto& s : segments) total += s.duration;
  return total;
}

void QuenchSchedule::validate() const {
  if (segments.empty()) throw DomainError("quench schedule needs at least one segment");
  spreadcx::validate(initial);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (!(s.duration > 0.0) || !std::isfinite(s.duration))
      throw DomainError("segment " + std::to_string(i) + " must have a positive duration");
    if (kind_of(s.params) != kind())
      throw DomainError("segment " + std::to_string(i) + " uses a different model than the initial state");
    spreadcx::validate(s.params);
  }
}

ComplexityCurve quench_complexity(const QuenchSchedule& schedule, std::span<const double> times,
                                  const MomentumGrid& grid) {
  schedule.validate();
  const double total = schedule.total_duration();
  const double slack = 1e-12 * std::max(1.0, total);
  for (double t : times)
    if (!(t >= -slack && t <= total + slack))
      throw DomainError("time " + std::to_string(t) + " lies outside the schedule [0, " +
                        std::to_string(total) + "]");

  const std::size_t nk = grid.size();
  const std::size_t ns = schedule.segments.size();
  std::vector<double> starts(ns);
  for (std::size_t s = 1; s < ns; ++s) starts[s] = starts[s - 1] + schedule.segments[s - 1].duration;

  // Per mode: initial angle, segment Hamiltonians and the state entering each segment.
  std::vector<double> phi0(nk);
  std::vector<BlochComponents> modes(nk * ns);
  std::vector<ModeState> entry(nk * ns);
  for (std::size_t i = 0; i < nk; ++i) {
    const double k = grid.nodes()[i];
    phi0[i] = components(schedule.initial, k).phi;
    ModeState psi = ground_state(phi0[i]);
    for (std::size_t s = 0; s < ns; ++s) {
      modes[i * ns + s] = components(schedule.segments[s].params, k);
      entry[i * ns + s] = psi;
      psi = apply_unitary(mode_unitary(mode_hamiltonian(modes[i * ns + s]), schedule.segments[s].duration), psi);
    }
  }

  const double prefactor = measure_prefactor(schedule.kind());
  ComplexityCurve curve;
  curve.times.assign(times.begin(), times.end());
  curve.complexity.resize(times.size());
  parallel_for(times.size(), [&](std::size_t j) {
    const double t = std::clamp(times[j], 0.0, total);
    std::size_t seg = 0;
    while (seg + 1 < ns && t > starts[seg] + schedule.segments[seg].duration) ++seg;
    const double dt = t - starts[seg];
    double sum = 0.0;
    for (std::size_t i = 0; i < nk; ++i) {
      const auto u = mode_unitary(mode_hamiltonian(modes[i * ns + seg]), dt);
      sum += grid.weights()[i] * ground_state_loss(phi0[i], apply_unitary(u, entry[i * ns + seg]));
    }
    curve.complexity[j] = prefactor * sum;
  });
  return curve;
}

double single_quench_complexity(const ModelParams& initial, const ModelParams& final_params,
                                double t, const MomentumGrid& grid) {
  validate(initial);
  validate(final_params);
  if (kind_of(initial) != kind_of(final_params))
    throw DomainError("initial and final parameters belong to different models");
  const double integral = simpson_integrate(
      [&](double k) {
        return quench_mode_complexity(components(initial, k).phi, components(final_params, k), t);
      },
      grid);
  return measure_prefactor(kind_of(initial)) * integral;
}

double quench_plateau(const ModelParams& initial, const ModelParams& final_params,
                      const MomentumGrid& grid) {
  validate(initial);
  validate(final_params);
  const double integral = simpson_integrate(
      [&](double k) {
        const double s = std::sin(components(final_params, k).phi - components(initial, k).phi);
        return s * s;
      },
      grid);
  return 0.5 * measure_prefactor(kind_of(initial)) * integral;
}

std::vector<double> uniform_times(double end, std::size_t samples) {
  if (samples < 2) throw DomainError("need at least two time samples");
  std::vector<double> t(samples);
  for (std::size_t i = 0; i < samples; ++i)
    t[i] = end * static_cast<double>(i) / static_cast<double>(samples - 1);
  return t;
}

}  // namespace spreadcx
