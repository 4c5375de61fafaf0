// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <vector>

#include "irsmimo/schemes.hpp"
#include "irsmimo/sim_config.hpp"

namespace irsmimo {

struct DropResult {
  int drop_index = 0;
  std::map<Scheme, SchemeResult> results;
  int resample_attempts = 0;
};

/// One point of an empirical CDF.
struct CdfPoint {
  double rate = 0.0;
  double cumulative_probability = 0.0;
};

struct SchemeSummary {
  double likely95 = 0.0;  // rate exceeded in 95% of drops
  double likely50 = 0.0;  // median
  double mean = 0.0;
  int samples = 0;
};

struct CampaignResult {
  SimConfig config;
  std::vector<DropResult> drops;
  std::map<Scheme, std::vector<double>> sorted_sum_rates;
  std::map<Scheme, SchemeSummary> summaries;
  int resampled_drops = 0;
};

/// Thermal noise power kappa * B_w * T0 * 10^(N_f/10) in watts.
double noise_variance(double bw_hz, double t0_kelvin, double nf_db);

/// ceil(k/2) users uniform over the center square, floor(k/2) over the edge
/// square, in that order.
std::vector<Point2> place_users(Rng& rng, const Geometry& geometry, int k);

/// One drop: seed derived from (base_seed, drop_index), users placed, the
/// channel realized once, every requested scheme evaluated on it. Degenerate
/// realizations are resampled with a fresh derived seed.
DropResult run_drop(int drop_index, const SimConfig& cfg);

/// Full campaign. Drops run in parallel across `workers` threads; the result
/// is a pure function of the config, independent of worker count.
CampaignResult run_campaign(const SimConfig& cfg);

/// Step CDF at the sorted sample values, probability i/n after the i-th.
std::vector<CdfPoint> empirical_cdf(const std::vector<double>& samples);

/// x%-likely rate: the (100-x)-th nearest-rank percentile (the rate exceeded
/// with probability >= x%). likelihood must lie strictly inside (0, 100).
double percentile_rate(std::vector<double> samples, double likelihood_percent);

}  // namespace irsmimo
