#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "spreadcx/models.hpp"
#include "spreadcx/numerics.hpp"

namespace spreadcx {

/// Per-mode ground-state spread complexity relative to the fermion vacuum:
/// cos^2(phi/2) for the spin chains, sin^2(phi/2) for SSH.
double ground_state_mode_complexity(ModelKind kind, const BlochComponents& mode) noexcept;

/// Momentum-integrated ground-state complexity with the model's prefactor.
double ground_state_complexity(const ModelParams& params, const MomentumGrid& grid = MomentumGrid{});

/// Ground-state complexity along one parameter axis plus its centered derivative.
SweepResult complexity_derivative_sweep(const ModelParams& base, std::string_view axis,
                                        const AxisRange& range,
                                        const MomentumGrid& grid = MomentumGrid{});

struct QuenchSegment {
  ModelParams params;
  double duration = 0.0;
};

/// The ground state of `initial` evolved through `segments` in order.
struct QuenchSchedule {
  ModelParams initial;
  std::vector<QuenchSegment> segments;

  static QuenchSchedule single(const ModelParams& initial, const ModelParams& final_params,
                               double duration);

  ModelKind kind() const noexcept { return kind_of(initial); }
  double total_duration() const noexcept;
  /// At least one segment, positive durations, one model throughout.
  void validate() const;
};

struct ComplexityCurve {
  std::vector<double> times;
  std::vector<double> complexity;
};

/// C(t) = prefactor * int (1 - |S_k(t)|^2) dk, with S_k built from composed
/// exact 2x2 mode unitaries. Times must lie in [0, total_duration].
ComplexityCurve quench_complexity(const QuenchSchedule& schedule, std::span<const double> times,
                                  const MomentumGrid& grid = MomentumGrid{});

/// Closed form prefactor * int sin^2(phi_f - phi_i) sin^2(r_f t) dk of a single quench.
double single_quench_complexity(const ModelParams& initial, const ModelParams& final_params,
                                double t, const MomentumGrid& grid = MomentumGrid{});

/// Late-time mean of a single-quench curve, (prefactor/2) int sin^2(phi_f - phi_i) dk.
double quench_plateau(const ModelParams& initial, const ModelParams& final_params,
                      const MomentumGrid& grid = MomentumGrid{});

/// `samples` evenly spaced times covering [0, end] inclusive.
std::vector<double> uniform_times(double end, std::size_t samples);

}  // namespace spreadcx
