#pragma once

// The three free-fermion chains as maps k -> BlochComponents.
//
//   three-spin Ising:  r2 = J3 sin 2k - sin k,  r3 = h + cos k - J3 cos 2k   (Jx = 1)
//   XY chain:          r2 = gamma sin k,        r3 = h + cos k
//   SSH chain:         r2 = t1 - t2 cos k,      r3 = t2 sin k                (mu_s = 0)
//
// k runs over (0, pi); the momentum measure is 1/(2 pi) for the spin chains
// and 1/pi for SSH.

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spreadcx/mode_core.hpp"

namespace spreadcx {

struct ThreeSpinParams {
  double h = 0.0;
  double j3 = 0.0;
};

struct XYParams {
  double h = 0.0;
  double gamma = 0.0;  // anisotropy
};

struct SSHParams {
  double t1 = 0.0;  // intra-cell hopping
  double t2 = 0.0;  // inter-cell hopping
};

using ModelParams = std::variant<ThreeSpinParams, XYParams, SSHParams>;

enum class ModelKind { three_spin, xy, ssh };

ModelKind kind_of(const ModelParams& p) noexcept;
std::string_view model_name(ModelKind kind) noexcept;
/// Accepts "three-spin", "xy", "ssh".
ModelKind parse_model_kind(std::string_view name);

/// Momentum-measure prefactor used by spread complexity: 1/(2 pi) or 1/pi (SSH).
double measure_prefactor(ModelKind kind) noexcept;

BlochComponents components(const ThreeSpinParams& p, double k) noexcept;
BlochComponents components(const XYParams& p, double k) noexcept;
BlochComponents components(const SSHParams& p, double k) noexcept;
BlochComponents components(const ModelParams& p, double k) noexcept;

/// Throws DomainError for non-finite values or negative SSH hoppings.
void validate(const ModelParams& p);

// Named access used by parameter sweeps and scenario files.
std::vector<std::string_view> parameter_names(ModelKind kind);
double get_parameter(const ModelParams& p, std::string_view name);
ModelParams with_parameter(ModelParams p, std::string_view name, double value);
ModelParams default_params(ModelKind kind) noexcept;

struct CriticalLine {
  std::string name;
  std::function<bool(const ModelParams&, double tol)> contains;
};

/// Critical manifolds of a model, each a membership test with tolerance.
///   three-spin: h = J3 + 1, h = J3 - 1, h = -J3 (only for J3 > 1/2)
///   XY:         h = +1, h = -1, gamma = 0 with |h| < 1
///   SSH:        t1 = t2
std::vector<CriticalLine> critical_lines(ModelKind kind);
bool on_critical_line(const ModelParams& p, double tol);

/// Parameters at time t of a sinusoidal drive v(t) = delta cos(omega t).
/// Three-spin and XY drive the field, h -> h + v. SSH moves both hoppings,
/// t1 -> t1 - v, t2 -> t2 + v, and rejects a drive that makes one negative.
ModelParams driven_params(const ModelParams& base, double delta, double omega, double t);

}  // namespace spreadcx
