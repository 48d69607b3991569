#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spreadcx/errors.hpp"
#include "spreadcx/floquet.hpp"

using namespace spreadcx;

namespace {

/// Piecewise-constant midpoint evolution with dense exponentials of the
/// oracle Hamiltonian, returning 1 - |<psi(0)|psi(nT)>|^2.
double dense_stroboscopic_loss(double hc, double j3, double delta, double period, int cycles, double k,
                               int steps) {
  const Eigen::Matrix2cd h0 = oracle::hamiltonian(oracle::three_spin(hc, j3, k));
  const Eigen::VectorXcd psi0 = oracle::ground_vector(h0);
  Eigen::VectorXcd psi = psi0;
  const double dt = period / steps;
  const double w = 2 * oracle::pi / period;
  for (int c = 0; c < cycles; ++c)
    for (int s = 0; s < steps; ++s) {
      const double t = (s + 0.5) * dt;
      psi = oracle::expm_hermitian(oracle::hamiltonian(oracle::three_spin(hc + delta * std::cos(w * t), j3, k)), dt) * psi;
    }
  return 1.0 - std::norm(psi0.dot(psi));
}

}  // namespace

TEST(Floquet, GammaAtDrivePeak) {
  // h_c = 1.1, delta = 0.1, k = pi/2: r3 = 1.2 + 0.2, r2 = -1.
  const double w = 2 * oracle::pi / 1000.0;
  EXPECT_NEAR(gamma_of_t(ThreeSpinParams{1.1, 0.2}, 0.1, w, oracle::pi / 2, 0.0), std::atan2(1.0, 1.4), 1e-15);
}

TEST(Floquet, UndrivenEpsilonIsTwiceGapTimesPeriod) {
  const DriveSpec d{XYParams{0.7, 0.4}, 0.0, 250.0, 1};
  for (double k : {0.1, 1.0, 2.5}) {
    const double r = std::hypot(oracle::xy(0.7, 0.4, k).r2, oracle::xy(0.7, 0.4, k).r3);
    EXPECT_NEAR(epsilon_cycle(d, k), 2 * r * 250.0, 1e-10);
  }
}

TEST(Floquet, EpsilonMatchesIndependentQuadrature) {
  const double hc = 1.1, j3 = 0.2, delta = 0.1, period = 1000.0;
  const DriveSpec d{ThreeSpinParams{hc, j3}, delta, period, 1};
  for (double k : {0.3, 1.2, 2.9}) {
    const double ref = 2 * oracle::gauss(
                               [&](double t) {
                                 const auto b = oracle::three_spin(hc + delta * std::cos(2 * oracle::pi * t / period), j3, k);
                                 return std::hypot(b.r2, b.r3);
                               },
                               0, period, 200);
    EXPECT_NEAR(epsilon_cycle(d, k), ref, 1e-9 * ref);
  }
}

TEST(Floquet, EpsilonConvergesUnderRefinement) {
  const DriveSpec d{ThreeSpinParams{1.1, 0.2}, 0.1, 1000.0, 1};
  for (double k : {0.2, 1.5, 3.0}) EXPECT_NEAR(epsilon_cycle(d, k, 256), epsilon_cycle(d, k, 512), 1e-10);
  EXPECT_THROW(epsilon_cycle(d, 1.0, 63), DomainError);
  EXPECT_THROW(epsilon_cycle(d, 1.0, 66 - 1), DomainError);
}

TEST(Floquet, DirectIntegralOverCyclesIsLinear) {
  const DriveSpec d{SSHParams{1.0, 0.5}, 0.1, 100.0, 3};
  for (double k : {0.4, 2.0}) EXPECT_NEAR(epsilon_direct(d, k, 3), 3 * epsilon_cycle(d, k), 1e-9);
  EXPECT_EQ(epsilon_direct(d, 1.0, 0), 0.0);
}

TEST(Floquet, PerModeIdentity) {
  auto g = oracle::rng(31);
  for (int i = 0; i < 200; ++i) {
    const FloquetAngles a{oracle::uniform(g, 0, oracle::pi), oracle::uniform(g, 0, oracle::pi),
                          oracle::uniform(g, 0, 1e4)};
    const int n = static_cast<int>(oracle::uniform(g, 0, 100));
    const double loss = 1.0 - std::norm(stroboscopic_return_amplitude(a, n));
    const double s1 = std::sin(0.5 * n * a.epsilon_T), s2 = std::sin(a.gamma0 - a.phi_i);
    EXPECT_NEAR(loss, s1 * s1 * s2 * s2, 1e-12);
    EXPECT_NEAR(stroboscopic_mode_complexity(a, n), s1 * s1 * s2 * s2, 1e-15);
    EXPECT_LE(std::abs(stroboscopic_return_amplitude(a, n)), 1.0 + 1e-15);
  }
}

TEST(Floquet, LewisRiesenfeldAmplitudeReducesAtEqualAngles) {
  auto g = oracle::rng(32);
  for (int i = 0; i < 100; ++i) {
    const double g0 = oracle::uniform(g, 0, oracle::pi), pi_ = oracle::uniform(g, 0, oracle::pi);
    const double eps = oracle::uniform(g, 0, 100);
    const FloquetAngles a{g0, pi_, eps};
    EXPECT_LT(std::abs(return_amplitude_lr(g0, g0, pi_, eps) - stroboscopic_return_amplitude(a, 1)), 1e-14);
  }
}

TEST(Floquet, GeneralJReducesToHalf) {
  auto g = oracle::rng(33);
  for (int i = 0; i < 100; ++i) {
    const double g0 = oracle::uniform(g, 0.05, 3.0), gt = oracle::uniform(g, 0.05, 3.0);
    const double phi = oracle::uniform(g, 0.05, 3.0), eps = oracle::uniform(g, 0, 50);
    const double half = std::abs(return_amplitude_lr(g0, gt, phi, eps));
    EXPECT_NEAR(std::abs(general_j_return_amplitude(1, g0, gt, phi, eps)), half, 1e-10);
    for (int tj = 2; tj <= 7; ++tj)
      EXPECT_NEAR(std::abs(general_j_return_amplitude(tj, g0, gt, phi, eps)), std::pow(half, tj), 1e-9) << tj;
  }
  EXPECT_THROW(general_j_return_amplitude(0, 1, 1, 1, 1), DomainError);
  EXPECT_THROW(general_j_return_amplitude(1, 1, 1, 0.0, 1), DomainError);
}

TEST(Floquet, AdiabaticFormulaMatchesTimeOrderedEvolution) {
  // Slow drive: the adiabatic result holds up to O(omega / gap) corrections.
  const double hc = 0.5, j3 = 0.2, delta = 0.1, period = 1000.0;
  const int cycles = 2, steps = 2000;
  const DriveSpec d{ThreeSpinParams{hc, j3}, delta, period, cycles};
  for (double k : {0.4, 1.3, 2.2}) {
    const double lr = stroboscopic_mode_complexity(floquet_angles(d, k), cycles);
    EXPECT_NEAR(lr, dense_stroboscopic_loss(hc, j3, delta, period, cycles, k, steps), 5e-3) << k;
    EXPECT_NEAR(brute_force_stroboscopic_mode_complexity(d, k, steps),
                dense_stroboscopic_loss(hc, j3, delta, period, cycles, k, steps), 1e-10);
  }
}

TEST(Floquet, ComplexityVanishesWithoutDrive) {
  EXPECT_EQ(floquet_complexity(DriveSpec{ThreeSpinParams{1.1, 0.2}, 0.0, 1000.0, 40}), 0.0);
  EXPECT_EQ(floquet_complexity(DriveSpec{ThreeSpinParams{1.1, 0.2}, 0.1, 1000.0, 0}), 0.0);
}

TEST(Floquet, VsNMatchesSinglePoint) {
  const DriveSpec d{XYParams{1.0, 0.2}, 0.1, 1000.0, 7};
  const MomentumGrid grid(200);
  const std::vector<int> ns{0, 7, 13};
  const auto v = floquet_complexity_vs_n(d, ns, grid);
  EXPECT_EQ(v[0], 0.0);
  EXPECT_NEAR(v[1], floquet_complexity(d, grid), 1e-13);
  DriveSpec d13 = d;
  d13.n_cycles = 13;
  EXPECT_NEAR(v[2], floquet_complexity(d13, grid), 1e-13);
  for (double c : v) EXPECT_LE(c, 0.5 + 1e-12);
}

TEST(Floquet, DriveValidation) {
  EXPECT_THROW((DriveSpec{SSHParams{0.05, 1.0}, 0.1, 10.0, 1}.validate()), DomainError);
  EXPECT_THROW((DriveSpec{SSHParams{1.0, 1.0}, -0.1, 10.0, 1}.validate()), DomainError);
  EXPECT_THROW((DriveSpec{XYParams{}, 0.1, 0.0, 1}.validate()), DomainError);
  EXPECT_THROW((DriveSpec{XYParams{}, 0.1, 10.0, -1}.validate()), DomainError);
}
