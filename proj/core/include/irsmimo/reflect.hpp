// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "irsmimo/errors.hpp"

namespace irsmimo {

/// IRS reflection state: one phase per element, canonicalized to [0, 2pi).
/// Reflection amplitudes are fixed to 1, so the per-element coefficient is
/// exp(j phi_n).
struct PhaseProfile {
  Eigen::VectorXd phases;

  Eigen::VectorXcd coefficients() const;
};

/// Unit-norm transmit weight vector at the BS.
struct Beamformer {
  Eigen::VectorXcd w;
};

/// Objective |(g^T Theta H + f^T) w| recorded after each full alternating
/// iteration. The sequence is non-decreasing by construction.
struct OptimizationTrace {
  std::vector<double> objective;
  int iterations_run = 0;
};

struct JointSolution {
  PhaseProfile theta;
  Beamformer w;
  OptimizationTrace trace;
};

/// Reduce an angle into [0, 2pi).
double wrap_phase(double radians);

/// Combined channel (g^T Theta H + f^T) as a column vector in C^{N_b}.
Eigen::VectorXcd combined_channel(const Eigen::VectorXcd& g,
                                  const PhaseProfile& theta,
                                  const Eigen::MatrixXcd& h_mat,
                                  const Eigen::VectorXcd& f);

/// MRT against the direct link: w = conj(f)/||f||, so f^T w = ||f||.
Beamformer mrt_direct(const Eigen::VectorXcd& f);

/// Closed-form phase update given a fixed beamformer: each reflector
/// compensates its cascaded phase arg(g_n) + arg(h_n^T w) and aligns the
/// residual with the direct-link phase phi0 = arg(f^T w). If f^T w = 0, phi0
/// is taken as 0; a zero g_n or h_n^T w pins that phase to 0.
PhaseProfile optimal_phases(const Eigen::VectorXcd& g,
                            const Eigen::MatrixXcd& h_mat, const Beamformer& w,
                            const Eigen::VectorXcd& f);

/// MRT against the combined channel with fixed phases.
Beamformer mrt_combined(const Eigen::VectorXcd& g, const PhaseProfile& theta,
                        const Eigen::MatrixXcd& h_mat,
                        const Eigen::VectorXcd& f);

/// Alternating optimization of (Theta, w): starts from direct MRT, then per
/// iteration applies the closed-form phase update followed by combined MRT.
/// With tolerance > 0 the loop stops early once the relative objective gain
/// drops below it; otherwise exactly `iterations` passes run.
JointSolution alternating_optimize(const Eigen::VectorXcd& g,
                                   const Eigen::MatrixXcd& h_mat,
                                   const Eigen::VectorXcd& f, int iterations,
                                   double tolerance = 0.0);

/// Effective gain rho = (g^T Theta H + f^T) w, no normalization.
std::complex<double> effective_gain(const Eigen::VectorXcd& g,
                                    const PhaseProfile& theta,
                                    const Eigen::MatrixXcd& h_mat,
                                    const Eigen::VectorXcd& f,
                                    const Beamformer& w);

/// Instantaneous SNR P_d |rho|^2 / sigma_n^2.
double snr(std::complex<double> rho, double pd_watts, double sigma_n2_watts);

}  // namespace irsmimo
