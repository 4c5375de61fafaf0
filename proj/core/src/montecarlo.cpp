// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#include "irsmimo/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace irsmimo {

namespace {
constexpr double kBoltzmann = 1.380649e-23;  // J/K
constexpr int kMaxResampleAttempts = 8;
}  // namespace

void SimConfig::validate() const {
  if (users < 1) {
    throw ConfigError("users must be >= 1");
  }
  if (reflectors < 0) {
    throw ConfigError("reflectors must be >= 0");
  }
  if (bs_antennas < 1) {
    throw ConfigError("bs_antennas must be >= 1");
  }
  if (!(pd_watts > 0.0)) {
    throw ConfigError("pd_watts must be > 0");
  }
  if (!(bw_hz > 0.0)) {
    throw ConfigError("bandwidth_hz must be > 0");
  }
  if (!(t0_kelvin > 0.0)) {
    throw ConfigError("t0_kelvin must be > 0");
  }
  if (drops < 1) {
    throw ConfigError("drops must be >= 1");
  }
  if (ao_iterations < 1) {
    throw ConfigError("ao_iterations must be >= 1");
  }
  if (ao_tolerance < 0.0) {
    throw ConfigError("ao_tolerance must be >= 0");
  }
  if (workers < 0) {
    throw ConfigError("workers must be >= 0");
  }
  if (schemes.empty()) {
    throw ConfigError("schemes must not be empty");
  }
  if (aided_policy == AidedUserPolicy::fixed_index &&
      (aided_fixed_index < 0 || aided_fixed_index >= users)) {
    throw ConfigError("aided_fixed_index out of range");
  }
  if (!(fixed_split_weak_fraction > 0.0) ||
      !(fixed_split_weak_fraction < 1.0)) {
    throw ConfigError("fixed_split_weak_fraction must lie in (0, 1)");
  }
  geometry.validate();
  pathloss.validate();
  bs_irs.validate();
}

double noise_variance(double bw_hz, double t0_kelvin, double nf_db) {
  if (!(bw_hz > 0.0) || !(t0_kelvin > 0.0)) {
    throw std::domain_error("noise_variance: bandwidth and T0 must be > 0");
  }
  return kBoltzmann * bw_hz * t0_kelvin * std::pow(10.0, nf_db / 10.0);
}

std::vector<Point2> place_users(Rng& rng, const Geometry& geometry, int k) {
  std::vector<Point2> users;
  users.reserve(std::max(k, 0));
  const int n_center = (k + 1) / 2;
  for (int i = 0; i < k; ++i) {
    const Square& area = i < n_center ? geometry.center_area
                                      : geometry.edge_area;
    Point2 p;
    p.x = area.corner.x + area.side * rng.uniform();
    p.y = area.corner.y + area.side * rng.uniform();
    users.push_back(p);
  }
  return users;
}

DropResult run_drop(int drop_index, const SimConfig& cfg) {
  const double sigma_n2 = noise_variance(cfg.bw_hz, cfg.t0_kelvin, cfg.nf_db);
  const SchemeParams params = SchemeParams::from_config(cfg, sigma_n2);
  const std::uint64_t drop_seed =
      mix_seed(cfg.base_seed, static_cast<std::uint64_t>(drop_index));

  for (int attempt = 0;; ++attempt) {
    const std::uint64_t seed =
        attempt == 0 ? drop_seed
                     : splitmix64(drop_seed +
                                  static_cast<std::uint64_t>(attempt));
    try {
      Rng rng(seed);
      const std::vector<Point2> users =
          place_users(rng, cfg.geometry, cfg.users);
      const ChannelSet channels = realize_drop(rng, cfg, users);
      DropResult dr;
      dr.drop_index = drop_index;
      dr.resample_attempts = attempt;
      for (Scheme s : cfg.schemes) {
        dr.results.emplace(s, evaluate_scheme(s, channels, params));
      }
      return dr;
    } catch (const DegenerateChannelError&) {
      if (attempt + 1 >= kMaxResampleAttempts) {
        throw;
      }
    }
  }
}

CampaignResult run_campaign(const SimConfig& cfg) {
  cfg.validate();
  CampaignResult result;
  result.config = cfg;
  result.drops.resize(cfg.drops);

  int workers = cfg.workers;
  if (workers == 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) {
      workers = 1;
    }
  }
  workers = std::min(workers, cfg.drops);

  if (workers <= 1) {
    for (int i = 0; i < cfg.drops; ++i) {
      result.drops[i] = run_drop(i, cfg);
    }
  } else {
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= cfg.drops || failed.load()) {
          return;
        }
        try {
          result.drops[i] = run_drop(i, cfg);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
          failed.store(true);
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back(work);
    }
    for (auto& th : pool) {
      th.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

  for (const DropResult& dr : result.drops) {
    result.resampled_drops += dr.resample_attempts > 0 ? 1 : 0;
  }
  for (Scheme s : cfg.schemes) {
    std::vector<double> samples;
    samples.reserve(cfg.drops);
    for (const DropResult& dr : result.drops) {
      samples.push_back(dr.results.at(s).sum_rate);
    }
    SchemeSummary summary;
    summary.samples = static_cast<int>(samples.size());
    summary.mean = std::accumulate(samples.begin(), samples.end(), 0.0) /
                   static_cast<double>(samples.size());
    std::sort(samples.begin(), samples.end());
    summary.likely95 = percentile_rate(samples, 95.0);
    summary.likely50 = percentile_rate(samples, 50.0);
    result.summaries.emplace(s, summary);
    result.sorted_sum_rates.emplace(s, std::move(samples));
  }
  return result;
}

std::vector<CdfPoint> empirical_cdf(const std::vector<double>& samples) {
  if (samples.empty()) {
    throw std::domain_error("empirical_cdf: need at least one sample");
  }
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  std::vector<CdfPoint> cdf;
  cdf.reserve(sorted.size());
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cdf.push_back({sorted[i], static_cast<double>(i + 1) / n});
  }
  return cdf;
}

double percentile_rate(std::vector<double> samples,
                       double likelihood_percent) {
  if (samples.empty()) {
    throw std::domain_error("percentile_rate: need at least one sample");
  }
  if (!(likelihood_percent > 0.0) || !(likelihood_percent < 100.0)) {
    throw std::domain_error(
        "percentile_rate: likelihood must lie in (0, 100)");
  }
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  const double percentile = 100.0 - likelihood_percent;
  auto rank = static_cast<std::size_t>(std::ceil(percentile * n / 100.0));
  rank = std::clamp<std::size_t>(rank, 1, samples.size());
  return samples[rank - 1];
}

}  // namespace irsmimo
