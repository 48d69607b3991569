#pragma once

// Periodically driven chains observed at stroboscopic times t = nT.
//
// The drive is h(t) = h_c + delta cos(wt) for the spin chains and
// (t1 - v, t2 + v), v = delta cos(wt), for SSH. In the adiabatic
// (Lewis-Riesenfeld) solution each mode contributes
//
//     1 - |S|^2 = sin^2(n eps_T / 2) sin^2(gamma0 - phi_i),
//
// where gamma0 is the Bloch angle with the drive on at t = 0, phi_i the angle
// of the undriven reference h_c and eps_T the dynamical phase of one period.
// Here eps_T = 2 int_0^T r dt for every model, the level splitting of the
// +-r mode spectrum.

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "spreadcx/mode_core.hpp"
#include "spreadcx/models.hpp"
#include "spreadcx/numerics.hpp"

namespace spreadcx {

struct DriveSpec {
  ModelParams base;
  double delta = 0.0;
  double period = 1.0;
  int n_cycles = 1;

  double omega() const noexcept { return 2.0 * kPi / period; }
  /// delta >= 0, period > 0, n_cycles >= 0, drive keeps SSH hoppings >= 0.
  void validate() const;
};

inline constexpr int kDefaultStepsPerPeriod = 256;

/// Bloch angle of the driven parameters at time t.
double gamma_of_t(const ModelParams& base, double delta, double omega, double k, double t);

/// eps_T = 2 int_0^T r(k, t) dt by Simpson with an even steps_per_period >= 64.
double epsilon_cycle(const DriveSpec& drive, double k, int steps_per_period = kDefaultStepsPerPeriod);

/// 2 int_0^{nT} r(k, t) dt integrated directly over all n periods.
double epsilon_direct(const DriveSpec& drive, double k, int n,
                      int steps_per_period = kDefaultStepsPerPeriod);

struct FloquetAngles {
  double gamma0 = 0.0;
  double phi_i = 0.0;
  double epsilon_T = 0.0;
};

FloquetAngles floquet_angles(const DriveSpec& drive, double k,
                             int steps_per_period = kDefaultStepsPerPeriod);

/// S = cos(n eps_T / 2) - i cos(gamma0 - phi_i) sin(n eps_T / 2).
cplx stroboscopic_return_amplitude(const FloquetAngles& angles, int n);

/// sin^2(n eps_T / 2) sin^2(gamma0 - phi_i).
double stroboscopic_mode_complexity(const FloquetAngles& angles, int n);

/// Return amplitude for arbitrary gamma(0), gamma(t):
/// cos((g0 - gt)/2) cos(eps/2) - i cos((g0 + gt)/2 - phi_i) sin(eps/2).
cplx return_amplitude_lr(double gamma0, double gamma_t, double phi_i, double epsilon) noexcept;

/// Spin-j return amplitude from the coherent-state sum with
/// z0 = -i tan(g0/2), zt = i tan(gt/2), zi = -i cot(phi_i/2).
/// At j = 1/2 it has the modulus of return_amplitude_lr; the overall phase differs.
/// twice_j in [1, 7]. Throws DomainError when phi_i = 0.
cplx general_j_return_amplitude(int twice_j, double gamma0, double gamma_t, double phi_i,
                                double epsilon);

/// Momentum-integrated stroboscopic complexity at t = n_cycles T.
double floquet_complexity(const DriveSpec& drive, const MomentumGrid& grid = MomentumGrid{},
                          int steps_per_period = kDefaultStepsPerPeriod);

/// Stroboscopic complexity for each cycle count in n_values.
std::vector<double> floquet_complexity_vs_n(const DriveSpec& drive, std::span<const int> n_values,
                                            const MomentumGrid& grid = MomentumGrid{},
                                            int steps_per_period = kDefaultStepsPerPeriod);

/// floquet_complexity at drive.n_cycles along one base-parameter axis.
SweepResult floquet_sweep(const DriveSpec& drive, std::string_view axis, const AxisRange& range,
                          const MomentumGrid& grid = MomentumGrid{},
                          int steps_per_period = kDefaultStepsPerPeriod);

/// Time-ordered evolution of the phi_i ground state through n_cycles periods,
/// one midpoint exponential per step, returning 1 - |<psi(0)|psi(nT)>|^2.
double brute_force_stroboscopic_mode_complexity(const DriveSpec& drive, double k,
                                                int steps_per_period);

}  // namespace spreadcx
