#include "spreadcx/workstats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "spreadcx/errors.hpp"

namespace spreadcx {

LanczosCoefficients per_mode_lanczos(const BlochComponents& initial,
                                     const BlochComponents& final_mode) {
  if (initial.degenerate())
    throw DomainError("per_mode_lanczos: initial mode is gapless (r_i = 0)");
  const double d = final_mode.phi - initial.phi;
  return LanczosCoefficients{-final_mode.r * std::cos(d), final_mode.r * std::abs(std::sin(d))};
}

namespace {

struct ModeIntegrands {
  double mean = 0.0;
  double variance = 0.0;
};

// Integrands of <W> and Var(W) at one momentum, sign conventions as in the header.
ModeIntegrands work_integrands(ModelKind kind, const BlochComponents& bi,
                               const BlochComponents& bf, std::size_t node, double k,
                               DegenerateModePolicy policy) {
  const bool signed_r2 = kind == ModelKind::ssh;
  if (bi.degenerate()) {
    if (policy == DegenerateModePolicy::reject)
      throw NumericalError("work integrand undefined: initial gap closes at k = " +
                               std::to_string(k) + " (R_i = 0)",
                           node, k);
    // phi_i = 0 convention: the closed mode contributes R3f to the mean.
    return ModeIntegrands{signed_r2 ? -bf.r3 : bf.r3, bf.r2 * bf.r2};
  }
  const double r2i = signed_r2 ? bi.r2 : std::abs(bi.r2);
  const double r2f = signed_r2 ? bf.r2 : std::abs(bf.r2);
  const double proj = (bf.r3 * bi.r3 + r2f * r2i) / bi.r;
  const double cross = (r2f * bi.r3 - bf.r3 * r2i) / bi.r;
  return ModeIntegrands{signed_r2 ? -proj : proj, cross * cross};
}

template <class Pick>
double work_integral(const ModelParams& initial, const ModelParams& final_params,
                     const MomentumGrid& grid, DegenerateModePolicy policy, Pick pick) {
  validate(initial);
  validate(final_params);
  const ModelKind kind = kind_of(initial);
  if (kind != kind_of(final_params))
    throw DomainError("initial and final parameters belong to different models");
  const auto& nodes = grid.nodes();
  const auto& w = grid.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double k = nodes[i];
    const auto bi = components(initial, k);
    const double v = pick(work_integrands(kind, bi, components(final_params, k), i, k, policy));
    if (!std::isfinite(v))
      throw NumericalError("non-finite work integrand at k = " + std::to_string(k) +
                               " (R_i = " + std::to_string(bi.r) + ")",
                           i, k);
    sum += w[i] * v;
  }
  return 0.5 / kPi * sum;
}

}  // namespace

double work_mean(const ModelParams& initial, const ModelParams& final_params,
                 const MomentumGrid& grid, DegenerateModePolicy policy) {
  return work_integral(initial, final_params, grid, policy,
                       [](const ModeIntegrands& m) { return m.mean; });
}

double work_variance(const ModelParams& initial, const ModelParams& final_params,
                     const MomentumGrid& grid, DegenerateModePolicy policy) {
  return work_integral(initial, final_params, grid, policy,
                       [](const ModeIntegrands& m) { return m.variance; });
}

WorkStats work_stats(const ModelParams& initial, const ModelParams& final_params,
                     const MomentumGrid& grid, DegenerateModePolicy policy) {
  return WorkStats{work_mean(initial, final_params, grid, policy),
                   work_variance(initial, final_params, grid, policy)};
}

double ssh_work_mean_closed_form(const SSHParams& initial, const SSHParams& final_params) {
  const double t1i = initial.t1, t2i = initial.t2;
  const double t1f = final_params.t1, t2f = final_params.t2;
  if (!(t1i > 0.0) || !(t2i > 0.0))
    throw DomainError("ssh_work_mean_closed_form needs t1i, t2i > 0");
  if (t1i == t2i) throw DomainError("ssh_work_mean_closed_form is undefined at t1i = t2i");
  const double s = t1i + t2i;
  const double d = t1i - t2i;
  const double m = 4.0 * t1i * t2i / (s * s);
  // The k integrals of 1/R_i and cos(k)/R_i reduce to K(m) and E(m); the
  // bracket's first term carries E and the second K.
  const double f1 = elliptic_e(m);
  const double f2 = elliptic_k(m);
  const double p = t1i * t2f + t1f * t2i;
  const double q = t1i * t2f - t1f * t2i;
  return -0.5 / kPi / (t1i * t2i) * (s * p * f1 - d * q * f2);
}

double ssh_work_variance_closed_form(const SSHParams& initial, const SSHParams& final_params) {
  const double q = initial.t1 * final_params.t2 - final_params.t1 * initial.t2;
  const double big = std::max(initial.t1, initial.t2);
  if (!(big > 0.0)) throw DomainError("ssh_work_variance_closed_form needs a nonzero initial hopping");
  return q * q / (4.0 * big * big);
}

WorkSweep work_stats_derivative_sweep(const ModelParams& initial, const ModelParams& final_params,
                                      std::string_view axis, const AxisRange& range,
                                      SweepSide side, const MomentumGrid& grid) {
  const ModelParams& swept = side == SweepSide::initial ? initial : final_params;
  get_parameter(swept, axis);
  auto xs = range.values();
  std::vector<double> mean(xs.size()), variance(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    ModelParams pi = initial, pf = final_params;
    (side == SweepSide::initial ? pi : pf) = with_parameter(swept, axis, xs[i]);
    const auto ws = work_stats(pi, pf, grid, DegenerateModePolicy::use_convention);
    mean[i] = ws.mean;
    variance[i] = ws.variance;
  });
  WorkSweep out;
  out.mean = make_sweep(std::string(axis), xs, std::move(mean));
  out.variance = make_sweep(std::string(axis), std::move(xs), std::move(variance));
  return out;
}

cplx characteristic_function(double phi_i, const BlochComponents& final_mode, double t) noexcept {
  return quench_return_amplitude(phi_i, final_mode, t);
}

LanczosData lanczos_oracle(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& start,
                           int max_steps) {
  const Eigen::Index n = h.rows();
  if (h.cols() != n || start.size() != n || n == 0)
    throw DomainError("lanczos_oracle: H must be square and match the start vector");
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw DomainError("lanczos_oracle: H is not Hermitian");
  if (std::abs(start.norm() - 1.0) > 1e-10)
    throw DomainError("lanczos_oracle: start vector is not normalized");
  if (max_steps < 1) throw DomainError("lanczos_oracle: max_steps must be >= 1");

  const Eigen::Index limit = std::min<Eigen::Index>(max_steps, n);
  Eigen::MatrixXcd basis(n, limit);
  LanczosData out;
  basis.col(0) = start;
  Eigen::Index count = 1;
  for (Eigen::Index j = 0;; ++j) {
    Eigen::VectorXcd w = h * basis.col(j);
    out.a.push_back(basis.col(j).dot(w).real());
    // Two passes of classical Gram-Schmidt against the whole basis.
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index q = 0; q <= j; ++q) w -= basis.col(q) * basis.col(q).dot(w);
    if (count == limit) break;
    const double b = w.norm();
    if (b < 1e-12) break;
    out.b.push_back(b);
    basis.col(j + 1) = w / b;
    ++count;
  }
  out.basis = basis.leftCols(count);
  return out;
}

ChainEvolution krylov_chain_evolve(const LanczosData& chain, double t, int steps) {
  const auto n = static_cast<Eigen::Index>(chain.a.size());
  if (n == 0) throw DomainError("krylov_chain_evolve: empty chain");
  if (steps < 1) throw DomainError("krylov_chain_evolve: steps must be >= 1");
  Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) tri(i, i) = chain.a[i];
  for (Eigen::Index i = 0; i + 1 < n && i < static_cast<Eigen::Index>(chain.b.size()); ++i)
    tri(i, i + 1) = tri(i + 1, i) = chain.b[i];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(tri);
  const double dt = t / steps;
  Eigen::VectorXcd phases(n);
  for (Eigen::Index i = 0; i < n; ++i)
    phases(i) = std::exp(cplx{0.0, -eig.eigenvalues()(i) * dt});
  const Eigen::MatrixXcd v = eig.eigenvectors().cast<cplx>();
  const Eigen::MatrixXcd step = v * phases.asDiagonal() * v.adjoint();

  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n);
  psi(0) = 1.0;
  for (int s = 0; s < steps; ++s) psi = step * psi;

  ChainEvolution out;
  for (Eigen::Index i = 0; i < n; ++i) out.complexity += static_cast<double>(i) * std::norm(psi(i));
  out.norm_drift = std::abs(psi.norm() - 1.0);
  return out;
}

}  // namespace spreadcx
