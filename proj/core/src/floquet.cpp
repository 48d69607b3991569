#include "spreadcx/floquet.hpp"

#include <cmath>
#include <string>

#include "spreadcx/errors.hpp"

namespace spreadcx {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_steps(int steps) {
  if (steps < 64 || steps % 2 != 0)
    throw DomainError("steps per period must be even and >= 64, got " + std::to_string(steps));
}

double gap_at(const DriveSpec& d, double k, double t) {
  return components(driven_params(d.base, d.delta, d.omega(), t), k).r;
}

}  // namespace

void DriveSpec::validate() const {
  spreadcx::validate(base);
  if (!(delta >= 0.0) || !std::isfinite(delta)) throw DomainError("drive amplitude delta must be >= 0");
  if (!(period > 0.0) || !std::isfinite(period)) throw DomainError("drive period must be > 0");
  if (n_cycles < 0) throw DomainError("number of cycles must be >= 0");
  // Extremes of the drive: cos(wt) = +1 at t = 0 and -1 at t = T/2.
  driven_params(base, delta, omega(), 0.0);
  driven_params(base, delta, omega(), 0.5 * period);
}

double gamma_of_t(const ModelParams& base, double delta, double omega, double k, double t) {
  return components(driven_params(base, delta, omega, t), k).phi;
}

double epsilon_cycle(const DriveSpec& drive, double k, int steps_per_period) {
  check_steps(steps_per_period);
  // cos(wt) = cos(w(T - t)): sample the first half of the period and mirror it.
  const int n = steps_per_period;
  const double h = drive.period / n;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i <= n / 2; ++i) {
    const double v = gap_at(drive, k, i * h);
    const double weight = (i == n / 2) ? 1.0 : 2.0;
    (i % 2 ? odd : even) += weight * v;
  }
  const double ends = 2.0 * gap_at(drive, k, 0.0);
  return 2.0 * h / 3.0 * (ends + 4.0 * odd + 2.0 * even);
}

double epsilon_direct(const DriveSpec& drive, double k, int n, int steps_per_period) {
  check_steps(steps_per_period);
  if (n < 0) throw DomainError("number of cycles must be >= 0");
  if (n == 0) return 0.0;
  return 2.0 * simpson_uniform([&](double t) { return gap_at(drive, k, t); }, 0.0,
                               n * drive.period, n * steps_per_period);
}

FloquetAngles floquet_angles(const DriveSpec& drive, double k, int steps_per_period) {
  FloquetAngles a;
  a.gamma0 = gamma_of_t(drive.base, drive.delta, drive.omega(), k, 0.0);
  a.phi_i = components(drive.base, k).phi;
  a.epsilon_T = epsilon_cycle(drive, k, steps_per_period);
  return a;
}

cplx stroboscopic_return_amplitude(const FloquetAngles& angles, int n) {
  if (n < 0) throw DomainError("number of cycles must be >= 0");
  const double half = 0.5 * n * angles.epsilon_T;
  return cplx{std::cos(half), -std::cos(angles.gamma0 - angles.phi_i) * std::sin(half)};
}

double stroboscopic_mode_complexity(const FloquetAngles& angles, int n) {
  if (n < 0) throw DomainError("number of cycles must be >= 0");
  const double a = std::sin(0.5 * n * angles.epsilon_T);
  const double b = std::sin(angles.gamma0 - angles.phi_i);
  return a * a * b * b;
}

cplx return_amplitude_lr(double gamma0, double gamma_t, double phi_i, double epsilon) noexcept {
  return cplx{std::cos(0.5 * (gamma0 - gamma_t)) * std::cos(0.5 * epsilon),
              -std::cos(0.5 * (gamma0 + gamma_t) - phi_i) * std::sin(0.5 * epsilon)};
}

cplx general_j_return_amplitude(int twice_j, double gamma0, double gamma_t, double phi_i,
                                double epsilon) {
  if (twice_j < 1 || twice_j > 7) throw DomainError("2j must lie in [1, 7]");
  if (std::sin(0.5 * phi_i) == 0.0) throw DomainError("cot(phi_i/2) has a pole at phi_i = 0");
  const cplx z0 = -kI * std::tan(0.5 * gamma0);
  const cplx zt = kI * std::tan(0.5 * gamma_t);
  const cplx zi = -kI / std::tan(0.5 * phi_i);
  const double sec0 = 1.0 / std::cos(0.5 * gamma0);
  const double sect = 1.0 / std::cos(0.5 * gamma_t);
  const cplx alpha = z0 + zi * sec0 * sec0 / (1.0 + zi * z0);
  const cplx phase = std::exp(-kI * epsilon);
  const cplx w = zt + alpha * sect * sect * phase / (1.0 + alpha * zt * phase);
  const double j = 0.5 * twice_j;
  const cplx prefactor = std::pow(std::cos(0.5 * gamma0), twice_j) *
                         std::pow(std::sin(0.5 * phi_i), 2 * twice_j) *
                         std::pow(std::cos(0.5 * gamma_t), twice_j) * std::exp(-kI * (j * epsilon)) *
                         std::pow(1.0 + zi * z0, twice_j) * std::pow(1.0 + zt * alpha * phase, twice_j);
  cplx sum{0.0, 0.0};
  double binom = 1.0;
  cplx power{1.0, 0.0};
  for (int n = 0; n <= twice_j; ++n) {
    sum += binom * power;
    binom = binom * (twice_j - n) / (n + 1);
    power *= -zi * w;
  }
  return sum * prefactor;
}

double floquet_complexity(const DriveSpec& drive, const MomentumGrid& grid, int steps_per_period) {
  drive.validate();
  if (drive.delta == 0.0 || drive.n_cycles == 0) return 0.0;
  const double integral = simpson_integrate(
      [&](double k) {
        return stroboscopic_mode_complexity(floquet_angles(drive, k, steps_per_period),
                                            drive.n_cycles);
      },
      grid);
  return measure_prefactor(kind_of(drive.base)) * integral;
}

std::vector<double> floquet_complexity_vs_n(const DriveSpec& drive, std::span<const int> n_values,
                                            const MomentumGrid& grid, int steps_per_period) {
  drive.validate();
  for (int n : n_values)
    if (n < 0) throw DomainError("number of cycles must be >= 0");
  std::vector<FloquetAngles> angles(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    angles[i] = floquet_angles(drive, grid.nodes()[i], steps_per_period);
  });
  const double prefactor = measure_prefactor(kind_of(drive.base));
  std::vector<double> out(n_values.size());
  parallel_for(n_values.size(), [&](std::size_t j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      sum += grid.weights()[i] * stroboscopic_mode_complexity(angles[i], n_values[j]);
    out[j] = prefactor * sum;
  });
  return out;
}

SweepResult floquet_sweep(const DriveSpec& drive, std::string_view axis, const AxisRange& range,
                          const MomentumGrid& grid, int steps_per_period) {
  get_parameter(drive.base, axis);
  auto xs = range.values();
  std::vector<double> values(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    DriveSpec d = drive;
    d.base = with_parameter(drive.base, axis, xs[i]);
    values[i] = floquet_complexity(d, grid, steps_per_period);
  });
  return make_sweep(std::string(axis), std::move(xs), std::move(values));
}

double brute_force_stroboscopic_mode_complexity(const DriveSpec& drive, double k,
                                                int steps_per_period) {
  drive.validate();
  if (steps_per_period < 1) throw DomainError("steps per period must be >= 1");
  const double phi_i = components(drive.base, k).phi;
  const double dt = drive.period / steps_per_period;
  const double omega = drive.omega();
  ModeState psi = ground_state(phi_i);
  for (int c = 0; c < drive.n_cycles; ++c) {
    for (int s = 0; s < steps_per_period; ++s) {
      // The drive is periodic, so the phase within the cycle suffices.
      const double t = (s + 0.5) * dt;
      const auto b = components(driven_params(drive.base, drive.delta, omega, t), k);
      psi = apply_unitary(mode_unitary(mode_hamiltonian(b), dt), psi);
    }
  }
  return ground_state_loss(phi_i, psi);
}

}  // namespace spreadcx
