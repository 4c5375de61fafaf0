// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "irsmimo/geometry.hpp"
#include "irsmimo/rng.hpp"
#include "irsmimo/sim_config.hpp"

namespace irsmimo {

/// One drop's channel realization. f[k] is the direct BS->UE vector (N_b),
/// g[k] the IRS->UE vector (N), h_mat the BS->IRS matrix whose n-th row is
/// the channel from the BS array to reflector n.
struct ChannelSet {
  std::vector<Eigen::VectorXcd> f;
  std::vector<Eigen::VectorXcd> g;
  Eigen::MatrixXcd h_mat;
  std::vector<double> sigma_f2;
  std::vector<double> sigma_g2;
  double sigma_h2 = 0.0;
};

/// COST-Hata three-slope path loss in dB (negative), distance in km.
double cost_hata_path_loss(double distance_km, const PathLossParams& params);

/// BS-IRS large-scale power gain L0 / x^(-alpha), distance in meters (>= 1).
double bs_irs_large_scale(double distance_m, const BsIrsLinkParams& params);

/// Linear variance 10^((P + S)/10) from path loss and shadowing in dB.
double large_scale_variance(double pathloss_db, double shadow_db);

/// One log-normal shadowing sample S ~ N(0, sigma_sd^2), in dB.
double draw_shadowing(Rng& rng, double sigma_sd_db);

/// i.i.d. CN(0, variance) vector of the given length.
Eigen::VectorXcd draw_rayleigh_vector(Rng& rng, int len, double variance);

/// Half-wavelength ULA steering vector: entry m = exp(j pi m sin(angle)).
Eigen::VectorXcd steering_vector(int n_elems, double angle_rad);

/// Rician mixture H = sqrt(G s/(G+1)) LOS + sqrt(s/(G+1)) NLOS with
/// unit-variance CN NLOS entries. `los` must be n x nb.
Eigen::MatrixXcd draw_rician_matrix(Rng& rng, int n, int nb, double sigma_h2,
                                    double gamma, const Eigen::MatrixXcd& los);

/// LOS component per the configured model: unit-modulus random phases, or a
/// rank-one steering outer product from the BS/IRS geometry.
Eigen::MatrixXcd los_matrix(Rng& rng, const SimConfig& cfg);

/// Full drop realization for the given user positions: per-user COST-Hata
/// path loss with independent shadowing on the BS-UE and IRS-UE links,
/// Rayleigh small-scale fading, and the Rician BS-IRS matrix.
ChannelSet realize_drop(Rng& rng, const SimConfig& cfg,
                        const std::vector<Point2>& locations);

}  // namespace irsmimo
