#pragma once

// Per-momentum-mode two-level algebra.
//
// Every model in the library reduces, mode by mode, to a 2x2 Hermitian
// operator acting on the pair {|1,1>, |0,0>} (a k, -k fermion pair either
// both occupied or both empty). We fix the ordered basis (|1,1>, |0,0>) and
// write the traceless part of the mode Hamiltonian as
//
//     H_k = -r (cos(phi) sigma_3 + sin(phi) sigma_2),
//
// whose eigenvalues are -r (ground) and +r. The analytic formulas of the
// spread and floquet modules, and the brute-force 2x2 oracles that check
// them, both work with the types below.

#include <complex>

#include <Eigen/Core>

namespace spreadcx {

using cplx = std::complex<double>;
using ModeMatrix = Eigen::Matrix2cd;

/// Bloch vector (r2, r3) of one momentum mode with derived length and angle.
///
/// phi = atan2(|r2|, r3) lies in [0, pi]; the sign of r2 is kept in `r2`
/// for integrands that need it. A gap-closing mode (r == 0) gets phi = 0.
struct BlochComponents {
  double r2 = 0.0;
  double r3 = 0.0;
  double r = 0.0;
  double phi = 0.0;

  bool degenerate() const noexcept { return r == 0.0; }

  /// Angle of the full (signed) vector, atan2(r2, r3) in (-pi, pi].
  double signed_phi() const noexcept;
};

BlochComponents bloch_from_components(double r2, double r3) noexcept;

/// Two-component state: amp_up multiplies |1,1>, amp_down multiplies |0,0>.
struct ModeState {
  cplx amp_up{0.0, 0.0};
  cplx amp_down{0.0, 0.0};

  double norm_squared() const noexcept { return std::norm(amp_up) + std::norm(amp_down); }
};

struct ModeHamiltonian {
  BlochComponents bloch;
  double identity_shift = 0.0;

  ModeMatrix matrix() const;
};

inline ModeHamiltonian mode_hamiltonian(const BlochComponents& b, double identity_shift = 0.0) {
  return ModeHamiltonian{b, identity_shift};
}

/// Ground state sin(phi/2)|0,0> - i cos(phi/2)|1,1> of the mode Hamiltonian with angle phi.
ModeState ground_state(double phi) noexcept;

/// exp(-i h t), evaluated in closed form.
ModeMatrix mode_unitary(const ModeHamiltonian& h, double t);

ModeState apply_unitary(const ModeMatrix& u, const ModeState& s) noexcept;

/// <a|b> = conj(a) . b
cplx overlap(const ModeState& a, const ModeState& b) noexcept;

/// 1 - |<ground_state(phi)|psi>|^2 for a normalized psi, evaluated as the
/// weight on the orthogonal state so small values keep full precision.
double ground_state_loss(double phi, const ModeState& psi) noexcept;

/// Closed-form return amplitude S = cos(r_f t) - i cos(phi_f - phi_i) sin(r_f t)
/// of the phi_i ground state evolved under the final mode Hamiltonian.
cplx quench_return_amplitude(double phi_i, const BlochComponents& final_mode, double t) noexcept;

/// 1 - |S|^2 for the sudden quench above: sin^2(phi_f - phi_i) sin^2(r_f t).
double quench_mode_complexity(double phi_i, const BlochComponents& final_mode, double t) noexcept;

}  // namespace spreadcx
