#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spreadcx/mode_core.hpp"

using namespace spreadcx;

namespace {

Eigen::Vector2cd as_vector(const ModeState& s) { return Eigen::Vector2cd(s.amp_up, s.amp_down); }

}  // namespace

TEST(BlochComponents, AngleUsesMagnitudeOfR2) {
  const auto up = bloch_from_components(0.5, 1.0);
  const auto down = bloch_from_components(-0.5, 1.0);
  EXPECT_DOUBLE_EQ(up.phi, down.phi);
  EXPECT_DOUBLE_EQ(up.r, std::hypot(0.5, 1.0));
  EXPECT_DOUBLE_EQ(down.signed_phi(), -up.signed_phi());
  EXPECT_GE(bloch_from_components(-0.3, -2.0).phi, 0.0);
  EXPECT_LE(bloch_from_components(-0.3, -2.0).phi, oracle::pi);
}

TEST(BlochComponents, ClosedGapHasZeroAngle) {
  const auto b = bloch_from_components(0.0, 0.0);
  EXPECT_TRUE(b.degenerate());
  EXPECT_EQ(b.phi, 0.0);
  EXPECT_EQ(b.signed_phi(), 0.0);
}

TEST(ModeHamiltonian, MatchesIndependentConstruction) {
  auto g = oracle::rng(1);
  for (int i = 0; i < 50; ++i) {
    const oracle::Bloch raw{oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2)};
    const auto h = mode_hamiltonian(bloch_from_components(raw.r2, raw.r3)).matrix();
    EXPECT_LT((h - oracle::hamiltonian(raw)).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(GroundState, IsLowestEigenvector) {
  auto g = oracle::rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto b = bloch_from_components(oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2));
    const Eigen::Vector2cd psi = as_vector(ground_state(b.phi));
    const Eigen::Matrix2cd h = mode_hamiltonian(b).matrix();
    EXPECT_NEAR(psi.norm(), 1.0, 1e-15);
    EXPECT_LT((h * psi + b.r * psi).norm(), 1e-13);
    EXPECT_NEAR(std::abs(oracle::ground_vector(h).dot(psi)), 1.0, 1e-12);
  }
}

TEST(ModeUnitary, MatchesDenseExponential) {
  auto g = oracle::rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto b = bloch_from_components(oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2));
    const double shift = oracle::uniform(g, -1, 1);
    const double t = oracle::uniform(g, 0, 30);
    const auto h = mode_hamiltonian(b, shift);
    const Eigen::MatrixXcd expected = oracle::expm_hermitian(h.matrix(), t);
    const ModeMatrix u = mode_unitary(h, t);
    EXPECT_LT((u - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((u * u.adjoint() - ModeMatrix::Identity()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(ModeUnitary, ZeroTimeIsIdentity) {
  const auto h = mode_hamiltonian(bloch_from_components(0.3, -0.7), 0.2);
  EXPECT_EQ((mode_unitary(h, 0.0) - ModeMatrix::Identity()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(QuenchAmplitude, ClosedFormMatchesEvolvedOverlap) {
  auto g = oracle::rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto bi = bloch_from_components(oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2));
    const auto bf = bloch_from_components(oracle::uniform(g, -2, 2), oracle::uniform(g, -2, 2));
    const double t = oracle::uniform(g, 0, 50);
    const ModeState psi0 = ground_state(bi.phi);
    const ModeState psit = apply_unitary(mode_unitary(mode_hamiltonian(bf), t), psi0);
    const cplx s = overlap(psit, psi0);
    EXPECT_LT(std::abs(s - quench_return_amplitude(bi.phi, bf, t)), 1e-12);
    EXPECT_NEAR(1.0 - std::norm(s), quench_mode_complexity(bi.phi, bf, t), 1e-12);
    EXPECT_NEAR(ground_state_loss(bi.phi, psit), quench_mode_complexity(bi.phi, bf, t), 1e-12);
  }
}

TEST(QuenchAmplitude, NoQuenchNoLoss) {
  const auto b = bloch_from_components(0.4, 0.9);
  for (double t : {0.0, 1.0, 17.3}) EXPECT_NEAR(quench_mode_complexity(b.phi, b, t), 0.0, 1e-30);
}

TEST(GroundStateLoss, IsNonNegativeAndBounded) {
  auto g = oracle::rng(5);
  for (int i = 0; i < 200; ++i) {
    const double phi = oracle::uniform(g, 0, oracle::pi);
    const double a = oracle::uniform(g, 0, 2 * oracle::pi);
    const double b = oracle::uniform(g, 0, 2 * oracle::pi);
    const double c = oracle::uniform(g, 0, 1);
    const ModeState s{std::polar(std::sqrt(c), a), std::polar(std::sqrt(1 - c), b)};
    const double loss = ground_state_loss(phi, s);
    EXPECT_GE(loss, 0.0);
    EXPECT_LE(loss, 1.0 + 1e-15);
    EXPECT_NEAR(loss, 1.0 - std::norm(overlap(ground_state(phi), s)), 1e-14);
  }
}
