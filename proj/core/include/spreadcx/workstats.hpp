#pragma once

// Work statistics of a sudden quench from the ground state of H_i to H_f.
//
// Per mode the work distribution has mean a0 and variance b1^2, the first two
// Lanczos coefficients of H_f seeded with the initial ground state.
//
// Sign conventions per model:
//   three-spin, xy:  <W> = +(1/2pi) int (R3f R3i + |R2f||R2i|) / Ri dk
//   ssh:             <W> = -(1/2pi) int (R3f R3i + R2f R2i) / Ri dk
// The variance is (1/2pi) int (R2f R3i - R3f R2i)^2 / Ri^2 dk in both cases,
// with |R2| for the spin chains and signed R2 for SSH (R2 = t1 - t2 cos k
// changes sign across the zone, and only the signed form reproduces the SSH
// closed forms below). No ground-state energy offset is subtracted, so a
// zero quench gives <W> = +-(1/2pi) int Ri dk rather than 0.

#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "spreadcx/mode_core.hpp"
#include "spreadcx/models.hpp"
#include "spreadcx/numerics.hpp"

namespace spreadcx {

struct WorkStats {
  double mean = 0.0;
  double variance = 0.0;
};

struct LanczosCoefficients {
  double a0 = 0.0;
  double b1 = 0.0;
};

/// a0 = -R_f cos(phi_f - phi_i), b1 = R_f |sin(phi_f - phi_i)| for the 2x2
/// mode Hamiltonian of `final_mode` started from ground_state(initial.phi).
/// Throws DomainError when the initial mode is degenerate.
LanczosCoefficients per_mode_lanczos(const BlochComponents& initial,
                                     const BlochComponents& final_mode);

/// How work integrals treat grid nodes where the initial gap closes.
enum class DegenerateModePolicy {
  reject,         // throw NumericalError naming k
  use_convention  // take phi = 0 for the closed mode, as bloch_from_components does
};

double work_mean(const ModelParams& initial, const ModelParams& final_params,
                 const MomentumGrid& grid = MomentumGrid{},
                 DegenerateModePolicy policy = DegenerateModePolicy::reject);

double work_variance(const ModelParams& initial, const ModelParams& final_params,
                     const MomentumGrid& grid = MomentumGrid{},
                     DegenerateModePolicy policy = DegenerateModePolicy::reject);

WorkStats work_stats(const ModelParams& initial, const ModelParams& final_params,
                     const MomentumGrid& grid = MomentumGrid{},
                     DegenerateModePolicy policy = DegenerateModePolicy::reject);

/// SSH mean in closed form,
///   -(1/2pi) / (t1i t2i) [ (t1i + t2i)(t1i t2f + t1f t2i) E(m)
///                         - (t1i - t2i)(t1i t2f - t1f t2i) K(m) ],
/// m = 4 t1i t2i / (t1i + t2i)^2. Requires t1i, t2i > 0 and t1i != t2i.
double ssh_work_mean_closed_form(const SSHParams& initial, const SSHParams& final_params);

/// (t1i t2f - t1f t2i)^2 / (4 max(t1i, t2i)^2); continuous at t1i = t2i.
double ssh_work_variance_closed_form(const SSHParams& initial, const SSHParams& final_params);

enum class SweepSide { initial, final };

struct WorkSweep {
  SweepResult mean;
  SweepResult variance;
};

/// Work mean and variance with centered derivatives along one parameter of
/// the initial (default) or final Hamiltonian. Closed initial modes use the
/// phi = 0 convention so the sweep may cross critical lines.
WorkSweep work_stats_derivative_sweep(const ModelParams& initial, const ModelParams& final_params,
                                      std::string_view axis, const AxisRange& range,
                                      SweepSide side = SweepSide::initial,
                                      const MomentumGrid& grid = MomentumGrid{});

/// Characteristic function of work for one mode with the ground-state energy
/// phase dropped: G(t) = <psi_i| exp(i H_f t) |psi_i>, which equals the return
/// amplitude S(t) = <psi(t)|psi(0)>.
cplx characteristic_function(double phi_i, const BlochComponents& final_mode, double t) noexcept;

struct LanczosData {
  std::vector<double> a;
  /// b[n] holds b_{n+1}, the coupling between Krylov vectors n and n+1.
  std::vector<double> b;
  /// Krylov vectors as columns.
  Eigen::MatrixXcd basis;
};

/// Lanczos tridiagonalization with full reorthogonalization. Stops after
/// max_steps vectors or when the next b falls below 1e-12. Rejects a
/// non-Hermitian H or a start vector that is not normalized.
LanczosData lanczos_oracle(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& start,
                           int max_steps);

struct ChainEvolution {
  double complexity = 0.0;
  double norm_drift = 0.0;
};

/// Evolves psi_n(0) = delta_{n0} on the Krylov chain to time t in `steps`
/// applications of the exact one-step propagator of the tridiagonal matrix,
/// returning sum_n n |psi_n|^2 and | ||psi|| - 1 |.
ChainEvolution krylov_chain_evolve(const LanczosData& chain, double t, int steps = 100);

inline double krylov_chain_complexity(const LanczosData& chain, double t) {
  return krylov_chain_evolve(chain, t).complexity;
}

}  // namespace spreadcx
