#include "spreadcx/mode_core.hpp"

#include <cmath>

namespace spreadcx {

namespace {
constexpr cplx kI{0.0, 1.0};
}

double BlochComponents::signed_phi() const noexcept {
  return degenerate() ? 0.0 : std::atan2(r2, r3);
}

BlochComponents bloch_from_components(double r2, double r3) noexcept {
  BlochComponents b;
  b.r2 = r2;
  b.r3 = r3;
  b.r = std::hypot(r2, r3);
  b.phi = b.r == 0.0 ? 0.0 : std::atan2(std::abs(r2), r3);
  return b;
}

ModeMatrix ModeHamiltonian::matrix() const {
  const double c = std::cos(bloch.phi);
  const double s = std::sin(bloch.phi);
  const double r = bloch.r;
  ModeMatrix m;
  m << identity_shift - r * c, kI * r * s,
      -kI * r * s, identity_shift + r * c;
  return m;
}

ModeState ground_state(double phi) noexcept {
  return ModeState{-kI * std::cos(0.5 * phi), cplx{std::sin(0.5 * phi), 0.0}};
}

ModeMatrix mode_unitary(const ModeHamiltonian& h, double t) {
  // H = s + r n.sigma with n = (0, -sin phi, -cos phi), so
  // exp(-iHt) = exp(-i s t) [cos(rt) - i sin(rt) n.sigma].
  const double c = std::cos(h.bloch.phi);
  const double s = std::sin(h.bloch.phi);
  const double cr = std::cos(h.bloch.r * t);
  const double sr = std::sin(h.bloch.r * t);
  const cplx phase = std::exp(-kI * (h.identity_shift * t));
  ModeMatrix u;
  u << cplx{cr, sr * c}, cplx{sr * s, 0.0},
      cplx{-sr * s, 0.0}, cplx{cr, -sr * c};
  return phase * u;
}

ModeState apply_unitary(const ModeMatrix& u, const ModeState& s) noexcept {
  return ModeState{u(0, 0) * s.amp_up + u(0, 1) * s.amp_down,
                   u(1, 0) * s.amp_up + u(1, 1) * s.amp_down};
}

cplx overlap(const ModeState& a, const ModeState& b) noexcept {
  return std::conj(a.amp_up) * b.amp_up + std::conj(a.amp_down) * b.amp_down;
}

double ground_state_loss(double phi, const ModeState& psi) noexcept {
  const ModeState perp{cplx{0.0, -std::sin(0.5 * phi)}, cplx{-std::cos(0.5 * phi), 0.0}};
  return std::norm(overlap(perp, psi));
}

cplx quench_return_amplitude(double phi_i, const BlochComponents& final_mode, double t) noexcept {
  const double rt = final_mode.r * t;
  return cplx{std::cos(rt), -std::cos(final_mode.phi - phi_i) * std::sin(rt)};
}

double quench_mode_complexity(double phi_i, const BlochComponents& final_mode, double t) noexcept {
  const double a = std::sin(final_mode.phi - phi_i);
  const double b = std::sin(final_mode.r * t);
  return a * a * b * b;
}

}  // namespace spreadcx
