// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irsmimo/geometry.hpp"

namespace irsmimo {

/// Multiple-access schemes the simulator can evaluate per drop.
enum class Scheme {
  tdma_noirs,
  fdma_noirs,
  noma_noirs,
  fdma_irs,
  tdma_irs,
  noma_irs,
};

/// Which user the surface is tuned for in FDMA-IRS / NOMA-IRS.
enum class AidedUserPolicy {
  weakest_direct,    // smallest direct-link norm ||f_k|| (default)
  strongest_direct,  // largest ||f_k||
  nearest_irs,       // largest IRS-link large-scale gain sigma_g^2
  fixed_index,       // configured index
};

/// NOMA power-allocation rule. All rules give weaker users more power and
/// normalize the coefficients to sum to one.
enum class PowerPolicy {
  rank_linear,   // weights 1..K by descending gain rank, ties averaged (default)
  inverse_gain,  // alpha_k proportional to 1/|rho_k|^2
  fixed_split,   // two-user split, weak user gets a configured fraction
};

/// Beamformer used by the users the surface is not tuned for in FDMA-IRS.
enum class FdmaBeamformer {
  direct_mrt,   // matched to the direct link only (default)
  combined_mf,  // matched to the full combined channel under the foreign phases
};

/// Construction of the BS-IRS LOS component.
enum class LosModel {
  random_phase,  // i.i.d. unit-modulus entries, redrawn each drop (default)
  rank_one,      // steering-vector outer product from the deployment geometry
};

/// COST-Hata three-slope path loss parameters (distances in km).
struct PathLossParams {
  double p0_db = 140.72;
  double x0_km = 0.01;
  double x1_km = 0.05;
  double sigma_sd_db = 8.0;

  void validate() const {
    if (!(x0_km > 0.0) || !(x0_km < x1_km)) {
      throw ConfigError("path loss: break points must satisfy 0 < x0 < x1");
    }
    if (sigma_sd_db < 0.0) {
      throw ConfigError("path loss: shadowing std must be >= 0");
    }
  }
};

/// BS-IRS link: reference gain at 1 m, distance exponent, Rician factor.
struct BsIrsLinkParams {
  double l0_db = -30.0;
  double alpha = 2.0;
  double rician_factor = 5.0;

  void validate() const {
    if (!(alpha > 0.0)) {
      throw ConfigError("bs-irs link: path loss exponent must be > 0");
    }
    if (rician_factor < 0.0) {
      throw ConfigError("bs-irs link: Rician factor must be >= 0");
    }
  }
};

/// Full campaign description. Field defaults reproduce the reference
/// two-user urban scenario; see README for the config-file key of each field.
struct SimConfig {
  int users = 2;
  int reflectors = 200;
  int bs_antennas = 16;

  double pd_watts = 20.0;
  double bw_hz = 20e6;
  double t0_kelvin = 290.0;
  double nf_db = 9.0;

  int drops = 10000;
  int ao_iterations = 3;
  double ao_tolerance = 0.0;  // 0: fixed iteration count, >0: early stop
  std::uint64_t base_seed = 1;

  Geometry geometry{
      .bs = {0.0, 0.0},
      .irs = {375.0, 375.0},
      .center_area = {{0.0, 0.0}, 300.0},
      .edge_area = {{250.0, 250.0}, 250.0},
  };
  PathLossParams pathloss;
  BsIrsLinkParams bs_irs;

  AidedUserPolicy aided_policy = AidedUserPolicy::weakest_direct;
  int aided_fixed_index = 0;
  PowerPolicy power_policy = PowerPolicy::rank_linear;
  double fixed_split_weak_fraction = 0.8;
  FdmaBeamformer fdma_beamformer = FdmaBeamformer::direct_mrt;
  LosModel los_model = LosModel::random_phase;
  std::optional<double> los_aod_rad;  // overrides the geometry-derived angles
  std::optional<double> los_aoa_rad;  // (rank_one LOS only)

  std::vector<Scheme> schemes{Scheme::tdma_noirs, Scheme::noma_noirs,
                              Scheme::fdma_irs, Scheme::tdma_irs,
                              Scheme::noma_irs};

  int workers = 0;  // 0: hardware concurrency

  void validate() const;
};

std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);

}  // namespace irsmimo
