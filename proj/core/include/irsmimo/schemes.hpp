// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "irsmimo/channel.hpp"
#include "irsmimo/reflect.hpp"
#include "irsmimo/sim_config.hpp"

namespace irsmimo {

/// NOMA superposition coefficients: alpha_k >= 0, sum = 1.
struct PowerAllocation {
  std::vector<double> alphas;
};

/// SIC decode bookkeeping: user indices sorted by combined gain, strongest
/// first, ties broken by lower original index.
struct SicOrder {
  std::vector<int> order;
};

/// Per-drop outcome of one multiple-access scheme.
struct SchemeResult {
  std::vector<double> per_user_rate;  // bps/Hz, indexed by original user
  double sum_rate = 0.0;              // bps/Hz
  std::optional<int> aided_user;      // set for FDMA-IRS / NOMA-IRS
};

/// Everything the per-drop rate computations need from the campaign config.
struct SchemeParams {
  double pd_watts = 20.0;
  double sigma_n2_watts = 1.0;
  int ao_iterations = 3;
  double ao_tolerance = 0.0;
  AidedUserPolicy aided_policy = AidedUserPolicy::weakest_direct;
  int aided_fixed_index = 0;
  PowerPolicy power_policy = PowerPolicy::rank_linear;
  double fixed_split_weak_fraction = 0.8;
  FdmaBeamformer fdma_beamformer = FdmaBeamformer::direct_mrt;

  static SchemeParams from_config(const SimConfig& cfg, double sigma_n2);
};

/// Pick the user the surface is tuned for.
int select_aided_user(const ChannelSet& channels, AidedUserPolicy policy,
                      int fixed_index = 0);

/// Power allocation over squared combined gains. All gains must be > 0.
PowerAllocation allocate_noma_power(const std::vector<double>& gains,
                                    PowerPolicy policy,
                                    double fixed_split_weak_fraction = 0.8);

/// Gain-descending decode order for successive interference cancellation.
SicOrder sic_order(const std::vector<double>& gains);

/// TDMA: every user gets its own slot; with the surface the phases are
/// re-tuned per user through the full alternating optimization.
SchemeResult tdma_sum_rate(const ChannelSet& channels,
                           const SchemeParams& params, bool with_irs);

/// FDMA: the surface is tuned for one aided user only; the rest keep the
/// configured partial-optimization beamformer under the foreign phases.
/// Without the surface this is identical to TDMA.
SchemeResult fdma_sum_rate(const ChannelSet& channels,
                           const SchemeParams& params, bool with_irs);

/// NOMA: superposition with SIC. With the surface, the aided user keeps its
/// jointly optimized gain and the rest use combined matched filters under the
/// foreign phases; without it every user is direct-MRT.
SchemeResult noma_sum_rate(const ChannelSet& channels,
                           const SchemeParams& params, bool with_irs);

SchemeResult evaluate_scheme(Scheme scheme, const ChannelSet& channels,
                             const SchemeParams& params);

}  // namespace irsmimo
