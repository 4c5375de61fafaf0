// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#include "irsmimo/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irsmimo {

double cost_hata_path_loss(double distance_km, const PathLossParams& params) {
  if (!(distance_km > 0.0)) {
    throw std::domain_error("cost_hata_path_loss: distance must be > 0 km");
  }
  const double p0 = params.p0_db;
  const double x0 = params.x0_km;
  const double x1 = params.x1_km;
  if (distance_km > x1) {
    return -p0 - 35.0 * std::log10(distance_km);
  }
  if (distance_km > x0) {
    return -p0 - 15.0 * std::log10(x1) - 20.0 * std::log10(distance_km);
  }
  return -p0 - 15.0 * std::log10(x1) - 20.0 * std::log10(x0);
}

double bs_irs_large_scale(double distance_m, const BsIrsLinkParams& params) {
  if (!(distance_m >= 1.0)) {
    throw std::domain_error(
        "bs_irs_large_scale: distance must be >= 1 m (reference distance)");
  }
  const double l0 = std::pow(10.0, params.l0_db / 10.0);
  return l0 / std::pow(distance_m, -params.alpha);
}

double large_scale_variance(double pathloss_db, double shadow_db) {
  return std::pow(10.0, (pathloss_db + shadow_db) / 10.0);
}

double draw_shadowing(Rng& rng, double sigma_sd_db) {
  if (sigma_sd_db < 0.0) {
    throw std::domain_error("draw_shadowing: sigma_sd must be >= 0");
  }
  return rng.gaussian(sigma_sd_db);
}

Eigen::VectorXcd draw_rayleigh_vector(Rng& rng, int len, double variance) {
  if (len < 0 || variance < 0.0) {
    throw std::domain_error("draw_rayleigh_vector: len and variance >= 0");
  }
  Eigen::VectorXcd v(len);
  for (int i = 0; i < len; ++i) {
    v[i] = rng.complex_gaussian(variance);
  }
  return v;
}

Eigen::VectorXcd steering_vector(int n_elems, double angle_rad) {
  if (n_elems < 1) {
    throw std::invalid_argument("steering_vector: need at least one element");
  }
  Eigen::VectorXcd a(n_elems);
  const double s = std::sin(angle_rad);
  for (int m = 0; m < n_elems; ++m) {
    const double phase = std::numbers::pi * m * s;
    a[m] = {std::cos(phase), std::sin(phase)};
  }
  return a;
}

Eigen::MatrixXcd draw_rician_matrix(Rng& rng, int n, int nb, double sigma_h2,
                                    double gamma, const Eigen::MatrixXcd& los) {
  if (gamma < 0.0 || sigma_h2 < 0.0) {
    throw std::domain_error("draw_rician_matrix: gamma and sigma_h2 >= 0");
  }
  if (los.rows() != n || los.cols() != nb) {
    throw std::invalid_argument("draw_rician_matrix: LOS dimensions mismatch");
  }
  const double los_scale = std::sqrt(gamma * sigma_h2 / (gamma + 1.0));
  const double nlos_scale = std::sqrt(sigma_h2 / (gamma + 1.0));
  Eigen::MatrixXcd h(n, nb);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < nb; ++c) {
      h(r, c) = los_scale * los(r, c) + nlos_scale * rng.complex_gaussian(1.0);
    }
  }
  return h;
}

Eigen::MatrixXcd los_matrix(Rng& rng, const SimConfig& cfg) {
  const int n = cfg.reflectors;
  const int nb = cfg.bs_antennas;
  if (cfg.los_model == LosModel::random_phase) {
    Eigen::MatrixXcd los(n, nb);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < nb; ++c) {
        const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        los(r, c) = {std::cos(phase), std::sin(phase)};
      }
    }
    return los;
  }
  // rank_one: steering outer product, angles from geometry unless overridden
  const Point2 bs = cfg.geometry.bs;
  const Point2 irs = cfg.geometry.irs;
  const double aod =
      cfg.los_aod_rad.value_or(std::atan2(irs.y - bs.y, irs.x - bs.x));
  const double aoa =
      cfg.los_aoa_rad.value_or(std::atan2(bs.y - irs.y, bs.x - irs.x));
  if (n == 0) {
    return Eigen::MatrixXcd(0, nb);
  }
  return steering_vector(n, aoa) * steering_vector(nb, aod).transpose();
}

ChannelSet realize_drop(Rng& rng, const SimConfig& cfg,
                        const std::vector<Point2>& locations) {
  ChannelSet ch;
  const int k = static_cast<int>(locations.size());
  ch.f.reserve(k);
  ch.g.reserve(k);
  ch.sigma_f2.reserve(k);
  ch.sigma_g2.reserve(k);

  for (const Point2& u : locations) {
    const double d_bs_m = distance(u, cfg.geometry.bs);
    const double d_irs_m = distance(u, cfg.geometry.irs);
    if (d_bs_m == 0.0 || d_irs_m == 0.0) {
      throw std::domain_error("realize_drop: user collocated with BS or IRS");
    }
    const double pl_f = cost_hata_path_loss(d_bs_m / 1000.0, cfg.pathloss);
    const double pl_g = cost_hata_path_loss(d_irs_m / 1000.0, cfg.pathloss);
    const double sh_f = draw_shadowing(rng, cfg.pathloss.sigma_sd_db);
    const double sh_g = draw_shadowing(rng, cfg.pathloss.sigma_sd_db);
    const double sf2 = large_scale_variance(pl_f, sh_f);
    const double sg2 = large_scale_variance(pl_g, sh_g);
    ch.sigma_f2.push_back(sf2);
    ch.sigma_g2.push_back(sg2);
    ch.f.push_back(draw_rayleigh_vector(rng, cfg.bs_antennas, sf2));
    ch.g.push_back(draw_rayleigh_vector(rng, cfg.reflectors, sg2));
  }

  const double d_bs_irs = distance(cfg.geometry.bs, cfg.geometry.irs);
  ch.sigma_h2 = bs_irs_large_scale(d_bs_irs, cfg.bs_irs);
  const Eigen::MatrixXcd los = los_matrix(rng, cfg);
  ch.h_mat = draw_rician_matrix(rng, cfg.reflectors, cfg.bs_antennas,
                                ch.sigma_h2, cfg.bs_irs.rician_factor, los);
  return ch;
}

}  // namespace irsmimo
