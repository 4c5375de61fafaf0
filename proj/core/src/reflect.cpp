// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#include "irsmimo/reflect.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irsmimo {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Non-conjugating inner product a^T b.
std::complex<double> tdot(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a.transpose() * b).value();
}
}  // namespace

double wrap_phase(double radians) {
  double v = std::fmod(radians, kTwoPi);
  if (v < 0.0) {
    v += kTwoPi;
  }
  if (v >= kTwoPi) {
    v -= kTwoPi;
  }
  return v;
}

Eigen::VectorXcd PhaseProfile::coefficients() const {
  Eigen::VectorXcd q(phases.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    q[i] = {std::cos(phases[i]), std::sin(phases[i])};
  }
  return q;
}

Eigen::VectorXcd combined_channel(const Eigen::VectorXcd& g,
                                  const PhaseProfile& theta,
                                  const Eigen::MatrixXcd& h_mat,
                                  const Eigen::VectorXcd& f) {
  if (g.size() != h_mat.rows() || f.size() != h_mat.cols() ||
      theta.phases.size() != g.size()) {
    throw std::invalid_argument("combined_channel: dimension mismatch");
  }
  // (g^T Theta H + f^T)^T = H^T (q .* g) + f
  return h_mat.transpose() * theta.coefficients().cwiseProduct(g) + f;
}

Beamformer mrt_direct(const Eigen::VectorXcd& f) {
  const double n = f.norm();
  if (n == 0.0) {
    throw DegenerateChannelError("mrt_direct: zero direct channel");
  }
  return Beamformer{f.conjugate() / n};
}

PhaseProfile optimal_phases(const Eigen::VectorXcd& g,
                            const Eigen::MatrixXcd& h_mat, const Beamformer& w,
                            const Eigen::VectorXcd& f) {
  if (g.size() != h_mat.rows() || f.size() != h_mat.cols() ||
      w.w.size() != h_mat.cols()) {
    throw std::invalid_argument("optimal_phases: dimension mismatch");
  }
  const Eigen::VectorXcd hw = h_mat * w.w;  // h_n^T w per reflector
  const std::complex<double> fw = tdot(f, w.w);
  const double phi0 = (fw == std::complex<double>(0.0, 0.0)) ? 0.0
                                                             : std::arg(fw);
  PhaseProfile theta;
  theta.phases.resize(g.size());
  for (Eigen::Index n = 0; n < g.size(); ++n) {
    if (g[n] == std::complex<double>(0.0, 0.0) ||
        hw[n] == std::complex<double>(0.0, 0.0)) {
      theta.phases[n] = 0.0;
      continue;
    }
    theta.phases[n] = wrap_phase(phi0 - std::arg(g[n]) - std::arg(hw[n]));
  }
  return theta;
}

Beamformer mrt_combined(const Eigen::VectorXcd& g, const PhaseProfile& theta,
                        const Eigen::MatrixXcd& h_mat,
                        const Eigen::VectorXcd& f) {
  const Eigen::VectorXcd c = combined_channel(g, theta, h_mat, f);
  const double n = c.norm();
  if (n == 0.0) {
    throw DegenerateChannelError("mrt_combined: zero combined channel");
  }
  return Beamformer{c.conjugate() / n};
}

JointSolution alternating_optimize(const Eigen::VectorXcd& g,
                                   const Eigen::MatrixXcd& h_mat,
                                   const Eigen::VectorXcd& f, int iterations,
                                   double tolerance) {
  if (iterations < 1) {
    throw std::invalid_argument("alternating_optimize: iterations >= 1");
  }
  JointSolution sol;
  sol.w = mrt_direct(f);
  double prev = 0.0;
  for (int it = 0; it < iterations; ++it) {
    sol.theta = optimal_phases(g, h_mat, sol.w, f);
    sol.w = mrt_combined(g, sol.theta, h_mat, f);
    // w is matched, so the objective equals the combined-channel norm.
    const double obj =
        std::abs(effective_gain(g, sol.theta, h_mat, f, sol.w));
    sol.trace.objective.push_back(obj);
    sol.trace.iterations_run = it + 1;
    if (tolerance > 0.0 && it > 0 && obj - prev <= tolerance * prev) {
      break;
    }
    prev = obj;
  }
  return sol;
}

std::complex<double> effective_gain(const Eigen::VectorXcd& g,
                                    const PhaseProfile& theta,
                                    const Eigen::MatrixXcd& h_mat,
                                    const Eigen::VectorXcd& f,
                                    const Beamformer& w) {
  return tdot(combined_channel(g, theta, h_mat, f), w.w);
}

double snr(std::complex<double> rho, double pd_watts, double sigma_n2_watts) {
  if (!(pd_watts > 0.0) || !(sigma_n2_watts > 0.0)) {
    throw std::domain_error("snr: power and noise variance must be > 0");
  }
  return pd_watts * std::norm(rho) / sigma_n2_watts;
}

}  // namespace irsmimo
