#include <gtest/gtest.h>

#include <algorithm>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "spreadcx/errors.hpp"
#include "spreadcx/workstats.hpp"

using namespace spreadcx;

namespace {

Eigen::MatrixXcd random_hermitian(std::mt19937_64& g, int n) {
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = oracle::cplx(oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1));
  return 0.5 * (a + a.adjoint());
}

Eigen::VectorXcd random_unit(std::mt19937_64& g, int n) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = oracle::cplx(oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1));
  return v.normalized();
}

// SSH work integrals straight from the signed Bloch components.
double ssh_mean_quadrature(double t1i, double t2i, double t1f, double t2f) {
  return -oracle::gauss(
             [&](double k) {
               const auto i = oracle::ssh(t1i, t2i, k), f = oracle::ssh(t1f, t2f, k);
               return (f.r3 * i.r3 + f.r2 * i.r2) / std::hypot(i.r2, i.r3);
             },
             0, oracle::pi, 2000) /
         (2 * oracle::pi);
}

}  // namespace

TEST(PerModeLanczos, MatchesOracleOnRandomQuenches) {
  auto g = oracle::rng(41);
  for (int i = 0; i < 500; ++i) {
    const oracle::Bloch ri{oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2)};
    const oracle::Bloch rf{oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2)};
    const auto chain = lanczos_oracle(oracle::hamiltonian(rf), oracle::ground_vector(oracle::hamiltonian(ri)), 2);
    const auto lc = per_mode_lanczos(bloch_from_components(ri.r2, ri.r3), bloch_from_components(rf.r2, rf.r3));
    EXPECT_NEAR(lc.a0, chain.a[0], 1e-12);
    ASSERT_EQ(chain.b.size(), 1u);
    EXPECT_NEAR(lc.b1, chain.b[0], 1e-12);
  }
  EXPECT_THROW(per_mode_lanczos(bloch_from_components(0, 0), bloch_from_components(1, 1)), DomainError);
}

TEST(WorkStats, SpinChainIntegralsFromLanczosCoefficients) {
  // Spin chains: <W> = -(1/2pi) int a0, Var = (1/2pi) int b1^2.
  auto g = oracle::rng(42);
  for (int i = 0; i < 10; ++i) {
    const double hi = oracle::uniform(g, -0.6, 0.6), gi = oracle::uniform(g, 0.3, 1);
    const double hf = oracle::uniform(g, -2, 2), gf = oracle::uniform(g, 0.1, 1);
    const auto mean = oracle::gauss(
        [&](double k) {
          const auto a = oracle::xy(hi, gi, k), b = oracle::xy(hf, gf, k);
          const auto c = lanczos_oracle(oracle::hamiltonian(b), oracle::ground_vector(oracle::hamiltonian(a)), 2);
          return -c.a[0];
        },
        0, oracle::pi, 400);
    const auto ws = work_stats(XYParams{hi, gi}, XYParams{hf, gf});
    EXPECT_NEAR(ws.mean, mean / (2 * oracle::pi), 1e-8);
    EXPECT_GE(ws.variance, 0.0);
  }
}

TEST(WorkStats, SSHMeanClosedFormMatchesQuadrature) {
  auto g = oracle::rng(43);
  int checked = 0;
  while (checked < 50) {
    const double t1i = oracle::uniform(g, 0.1, 2), t2i = oracle::uniform(g, 0.1, 2);
    if (std::abs(t1i - t2i) < 0.2) continue;
    const SSHParams pi{t1i, t2i}, pf{oracle::uniform(g, 0, 2), oracle::uniform(g, 0, 2)};
    const double closed = ssh_work_mean_closed_form(pi, pf);
    EXPECT_NEAR(work_mean(pi, pf), closed, 1e-8);
    EXPECT_NEAR(ssh_mean_quadrature(pi.t1, pi.t2, pf.t1, pf.t2), closed, 1e-8);
    ++checked;
  }
  EXPECT_THROW(ssh_work_mean_closed_form(SSHParams{1, 1}, SSHParams{1, 2}), DomainError);
  EXPECT_THROW(ssh_work_mean_closed_form(SSHParams{0, 1}, SSHParams{1, 2}), DomainError);
}

TEST(WorkStats, SSHVarianceClosedForm) {
  // Examples: (1, 0.5) -> (0.6, 0.8) and (0.5, 1) -> (1, 0.5).
  EXPECT_NEAR(ssh_work_variance_closed_form(SSHParams{1, 0.5}, SSHParams{0.6, 0.8}), 0.0625, 1e-15);
  EXPECT_NEAR(ssh_work_variance_closed_form(SSHParams{0.5, 1}, SSHParams{1, 0.5}), 0.5625 / 4, 1e-15);
  auto g = oracle::rng(44);
  int checked = 0;
  while (checked < 50) {
    const SSHParams pi{oracle::uniform(g, 0.1, 2), oracle::uniform(g, 0.1, 2)};
    if (std::abs(pi.t1 - pi.t2) < 0.1) continue;
    const SSHParams pf{oracle::uniform(g, 0, 2), oracle::uniform(g, 0, 2)};
    EXPECT_NEAR(work_variance(pi, pf), ssh_work_variance_closed_form(pi, pf), 1e-8);
    ++checked;
  }
}

TEST(WorkStats, SSHVarianceContinuousAcrossCriticalLine) {
  const SSHParams pf{0.6, 0.8};
  const double below = ssh_work_variance_closed_form(SSHParams{0.7 - 1e-12, 0.7}, pf);
  const double above = ssh_work_variance_closed_form(SSHParams{0.7 + 1e-12, 0.7}, pf);
  EXPECT_NEAR(below, above, 1e-9);
  EXPECT_NEAR(work_variance(SSHParams{0.7 - 1e-6, 0.7}, pf), work_variance(SSHParams{0.7 + 1e-6, 0.7}, pf), 1e-5);
}

TEST(WorkStats, VarianceNonNegativeOnGrid) {
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      const ModelParams pi = ThreeSpinParams{-2.0 + 0.23 * i, 0.1 * j}, pf = ThreeSpinParams{0.5, 0.7};
      const auto ws = work_stats(pi, pf, MomentumGrid(200), DegenerateModePolicy::use_convention);
      EXPECT_GE(ws.variance, 0.0);
      EXPECT_TRUE(std::isfinite(ws.mean));
    }
}

TEST(WorkStats, DegenerateInitialModePolicy) {
  // h = -1 closes the XY gap at k = 0, the first grid node.
  const ModelParams pi = XYParams{-1.0, 0.5}, pf = XYParams{0.6, 0.5};
  try {
    work_mean(pi, pf);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_EQ(e.node(), 0u);
  }
  EXPECT_NO_THROW(work_stats(pi, pf, MomentumGrid{}, DegenerateModePolicy::use_convention));
}

TEST(WorkStats, ModelMismatchRejected) {
  EXPECT_THROW(work_mean(XYParams{}, SSHParams{}), DomainError);
}

TEST(WorkStats, DerivativeSweepFollowsRequestedSide) {
  const auto s = work_stats_derivative_sweep(XYParams{0.3, 0.1}, XYParams{0.6, 0.5}, "h", AxisRange{-0.5, 0.5, 0.5},
                                             SweepSide::final, MomentumGrid(200));
  ASSERT_EQ(s.mean.value.size(), 3u);
  EXPECT_NEAR(s.variance.value[2], work_variance(XYParams{0.3, 0.1}, XYParams{0.5, 0.5}, MomentumGrid(200)), 1e-15);
}

TEST(CharacteristicFunction, DerivativesGiveMoments) {
  // G(t) = <exp(i H t)>: G'(0) = i a0 and G''(0) = -(a0^2 + b1^2).
  auto g = oracle::rng(45);
  const double h = 1e-3;
  for (int i = 0; i < 50; ++i) {
    const auto bi = bloch_from_components(oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2));
    const auto bf = bloch_from_components(oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2));
    const auto lc = per_mode_lanczos(bi, bf);
    auto G = [&](double t) { return characteristic_function(bi.phi, bf, t); };
    const cplx d1 = (-G(2 * h) + 8.0 * G(h) - 8.0 * G(-h) + G(-2 * h)) / (12 * h);
    const cplx d2 = (-G(2 * h) + 16.0 * G(h) - 30.0 * G(0) + 16.0 * G(-h) - G(-2 * h)) / (12 * h * h);
    EXPECT_NEAR(d1.real(), 0.0, 1e-6);
    EXPECT_NEAR(d1.imag(), lc.a0, 1e-6);
    EXPECT_NEAR(d2.real(), -(lc.a0 * lc.a0 + lc.b1 * lc.b1), 1e-6);
  }
}

TEST(LanczosOracle, EigenvectorStartTerminates) {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(3, 3);
  h.diagonal() << 1.0, 2.0, 3.0;
  const auto c = lanczos_oracle(h, Eigen::VectorXcd::Unit(3, 1), 3);
  ASSERT_EQ(c.a.size(), 1u);
  EXPECT_TRUE(c.b.empty());
  EXPECT_DOUBLE_EQ(c.a[0], 2.0);
}

TEST(LanczosOracle, FullChainReproducesSpectrumAndAction) {
  auto g = oracle::rng(46);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::MatrixXcd h = random_hermitian(g, 6);
    const auto c = lanczos_oracle(h, random_unit(g, 6), 6);
    ASSERT_EQ(c.a.size(), 6u);
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(6, 6);
    for (int i = 0; i < 6; ++i) tri(i, i) = c.a[i];
    for (int i = 0; i < 5; ++i) tri(i, i + 1) = tri(i + 1, i) = c.b[i];
    const Eigen::VectorXd ev_t = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(tri).eigenvalues();
    const Eigen::VectorXd ev_h = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h).eigenvalues();
    EXPECT_LT((ev_t - ev_h).cwiseAbs().maxCoeff(), 1e-9);
    const Eigen::MatrixXcd proj = c.basis.adjoint() * h * c.basis;
    EXPECT_LT((proj - tri.cast<oracle::cplx>()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((c.basis.adjoint() * c.basis - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(LanczosOracle, RejectsBadInput) {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
  h(0, 1) = 1.0;
  EXPECT_THROW(lanczos_oracle(h, Eigen::VectorXcd::Unit(2, 0), 2), DomainError);
  EXPECT_THROW(lanczos_oracle(Eigen::MatrixXcd::Identity(2, 2), Eigen::VectorXcd::Ones(2), 2), DomainError);
}

TEST(KrylovChain, TwoSiteMatchesReturnProbability) {
  auto g = oracle::rng(47);
  for (int i = 0; i < 50; ++i) {
    const oracle::Bloch ri{oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2)};
    const oracle::Bloch rf{oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2)};
    const auto chain = lanczos_oracle(oracle::hamiltonian(rf), oracle::ground_vector(oracle::hamiltonian(ri)), 2);
    const double t = oracle::uniform(g, 0, 20);
    const auto ev = krylov_chain_evolve(chain, t);
    const auto bi = bloch_from_components(ri.r2, ri.r3), bf = bloch_from_components(rf.r2, rf.r3);
    EXPECT_NEAR(ev.complexity, quench_mode_complexity(bi.phi, bf, t), 1e-8);
    EXPECT_LT(ev.norm_drift, 1e-10);
  }
}

TEST(KrylovChain, DecoupledChainStaysAtOrigin) {
  LanczosData c;
  c.a = {0.3, -0.2};
  c.b = {0.0};
  EXPECT_EQ(krylov_chain_complexity(c, 5.0), 0.0);
  EXPECT_THROW(krylov_chain_evolve(LanczosData{}, 1.0), DomainError);
}
