// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#include "irsmimo/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace irsmimo {

namespace {

double rate_bpshz(double snr_linear) { return std::log2(1.0 + snr_linear); }

// AO for the aided user; FDMA-IRS and NOMA-IRS call this with identical
// arguments so the aided user's gain matches its TDMA-IRS gain bit for bit.
JointSolution aided_solution(const ChannelSet& ch, int aided,
                             const SchemeParams& p) {
  return alternating_optimize(ch.g[aided], ch.h_mat, ch.f[aided],
                              p.ao_iterations, p.ao_tolerance);
}

// Squared combined gains under the aided user's phase profile. The aided user
// keeps its jointly optimized gain; everyone else applies `bf`.
std::vector<double> partial_gains(const ChannelSet& ch, int aided,
                                  const JointSolution& sol,
                                  FdmaBeamformer bf) {
  const int k = static_cast<int>(ch.f.size());
  std::vector<double> gains(k);
  for (int u = 0; u < k; ++u) {
    if (u == aided) {
      gains[u] = std::norm(
          effective_gain(ch.g[u], sol.theta, ch.h_mat, ch.f[u], sol.w));
      continue;
    }
    const Beamformer w = bf == FdmaBeamformer::direct_mrt
                             ? mrt_direct(ch.f[u])
                             : mrt_combined(ch.g[u], sol.theta, ch.h_mat,
                                            ch.f[u]);
    gains[u] =
        std::norm(effective_gain(ch.g[u], sol.theta, ch.h_mat, ch.f[u], w));
  }
  return gains;
}

std::vector<double> direct_gains(const ChannelSet& ch) {
  std::vector<double> gains;
  gains.reserve(ch.f.size());
  for (const auto& f : ch.f) {
    const double n = f.norm();
    if (n == 0.0) {
      throw DegenerateChannelError("direct_gains: zero direct channel");
    }
    gains.push_back(n * n);
  }
  return gains;
}

SchemeResult orthogonal_result(const std::vector<double>& gains,
                               const SchemeParams& p,
                               std::optional<int> aided) {
  const int k = static_cast<int>(gains.size());
  SchemeResult res;
  res.aided_user = aided;
  res.per_user_rate.reserve(k);
  for (double g2 : gains) {
    const double snr_u = p.pd_watts * g2 / p.sigma_n2_watts;
    res.per_user_rate.push_back(rate_bpshz(snr_u) / k);
  }
  res.sum_rate =
      std::accumulate(res.per_user_rate.begin(), res.per_user_rate.end(), 0.0);
  return res;
}

SchemeResult noma_result(const std::vector<double>& gains,
                         const SchemeParams& p, std::optional<int> aided) {
  const int k = static_cast<int>(gains.size());
  const PowerAllocation alloc = allocate_noma_power(
      gains, p.power_policy, p.fixed_split_weak_fraction);
  const SicOrder order = sic_order(gains);
  SchemeResult res;
  res.aided_user = aided;
  res.per_user_rate.assign(k, 0.0);
  // Decoding runs weakest-first; user at SIC position i cancels everything
  // decoded before it and is interfered only by the stronger users that
  // decode after it (positions 0..i-1 in gain-descending order).
  double interfering_alpha = 0.0;
  for (int pos = 0; pos < k; ++pos) {
    const int u = order.order[pos];
    const double gamma =
        gains[u] * alloc.alphas[u] * p.pd_watts /
        (gains[u] * interfering_alpha * p.pd_watts + p.sigma_n2_watts);
    res.per_user_rate[u] = rate_bpshz(gamma);
    interfering_alpha += alloc.alphas[u];
  }
  res.sum_rate =
      std::accumulate(res.per_user_rate.begin(), res.per_user_rate.end(), 0.0);
  return res;
}

}  // namespace

SchemeParams SchemeParams::from_config(const SimConfig& cfg, double sigma_n2) {
  SchemeParams p;
  p.pd_watts = cfg.pd_watts;
  p.sigma_n2_watts = sigma_n2;
  p.ao_iterations = cfg.ao_iterations;
  p.ao_tolerance = cfg.ao_tolerance;
  p.aided_policy = cfg.aided_policy;
  p.aided_fixed_index = cfg.aided_fixed_index;
  p.power_policy = cfg.power_policy;
  p.fixed_split_weak_fraction = cfg.fixed_split_weak_fraction;
  p.fdma_beamformer = cfg.fdma_beamformer;
  return p;
}

int select_aided_user(const ChannelSet& channels, AidedUserPolicy policy,
                      int fixed_index) {
  const int k = static_cast<int>(channels.f.size());
  if (k < 1) {
    throw std::domain_error("select_aided_user: no users");
  }
  switch (policy) {
    case AidedUserPolicy::fixed_index:
      if (fixed_index < 0 || fixed_index >= k) {
        throw std::domain_error("select_aided_user: fixed index out of range");
      }
      return fixed_index;
    case AidedUserPolicy::weakest_direct:
    case AidedUserPolicy::strongest_direct: {
      int best = 0;
      double best_norm = channels.f[0].norm();
      for (int u = 1; u < k; ++u) {
        const double n = channels.f[u].norm();
        const bool better = policy == AidedUserPolicy::weakest_direct
                                ? n < best_norm
                                : n > best_norm;
        if (better) {
          best = u;
          best_norm = n;
        }
      }
      return best;
    }
    case AidedUserPolicy::nearest_irs: {
      // distance proxy: the IRS-link large-scale gain
      int best = 0;
      for (int u = 1; u < k; ++u) {
        if (channels.sigma_g2[u] > channels.sigma_g2[best]) {
          best = u;
        }
      }
      return best;
    }
  }
  throw std::logic_error("select_aided_user: unknown policy");
}

PowerAllocation allocate_noma_power(const std::vector<double>& gains,
                                    PowerPolicy policy,
                                    double fixed_split_weak_fraction) {
  const int k = static_cast<int>(gains.size());
  if (k < 1) {
    throw std::domain_error("allocate_noma_power: no users");
  }
  for (double g : gains) {
    if (!(g > 0.0)) {
      throw std::domain_error("allocate_noma_power: gains must be > 0");
    }
  }
  PowerAllocation alloc;
  alloc.alphas.assign(k, 0.0);
  if (k == 1) {
    alloc.alphas[0] = 1.0;
    return alloc;
  }
  switch (policy) {
    case PowerPolicy::inverse_gain: {
      double sum = 0.0;
      for (int u = 0; u < k; ++u) {
        alloc.alphas[u] = 1.0 / gains[u];
        sum += alloc.alphas[u];
      }
      for (double& a : alloc.alphas) {
        a /= sum;
      }
      return alloc;
    }
    case PowerPolicy::rank_linear: {
      // weight = 1 + position in gain-descending order; equal gains share the
      // mean weight of their positions so the rule stays symmetric under ties
      const SicOrder order = sic_order(gains);
      std::vector<double> weight(k, 0.0);
      int pos = 0;
      while (pos < k) {
        int end = pos;
        while (end + 1 < k &&
               gains[order.order[end + 1]] == gains[order.order[pos]]) {
          ++end;
        }
        const double mean_weight = 1.0 + 0.5 * (pos + end);
        for (int i = pos; i <= end; ++i) {
          weight[order.order[i]] = mean_weight;
        }
        pos = end + 1;
      }
      const double sum = std::accumulate(weight.begin(), weight.end(), 0.0);
      for (int u = 0; u < k; ++u) {
        alloc.alphas[u] = weight[u] / sum;
      }
      return alloc;
    }
    case PowerPolicy::fixed_split: {
      if (k != 2) {
        throw std::domain_error(
            "allocate_noma_power: fixed_split is defined for K <= 2");
      }
      if (!(fixed_split_weak_fraction > 0.0) ||
          !(fixed_split_weak_fraction < 1.0)) {
        throw std::domain_error(
            "allocate_noma_power: weak fraction must lie in (0, 1)");
      }
      const int weak = gains[1] < gains[0] ? 1 : 0;
      alloc.alphas[weak] = fixed_split_weak_fraction;
      alloc.alphas[1 - weak] = 1.0 - fixed_split_weak_fraction;
      return alloc;
    }
  }
  throw std::logic_error("allocate_noma_power: unknown policy");
}

SicOrder sic_order(const std::vector<double>& gains) {
  if (gains.empty()) {
    throw std::domain_error("sic_order: no users");
  }
  SicOrder s;
  s.order.resize(gains.size());
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int a, int b) { return gains[a] > gains[b]; });
  return s;
}

SchemeResult tdma_sum_rate(const ChannelSet& channels,
                           const SchemeParams& params, bool with_irs) {
  if (channels.f.empty()) {
    throw std::domain_error("tdma_sum_rate: no users");
  }
  if (!with_irs) {
    return orthogonal_result(direct_gains(channels), params, std::nullopt);
  }
  const int k = static_cast<int>(channels.f.size());
  std::vector<double> gains(k);
  for (int u = 0; u < k; ++u) {
    const JointSolution sol = aided_solution(channels, u, params);
    gains[u] = std::norm(effective_gain(channels.g[u], sol.theta,
                                        channels.h_mat, channels.f[u], sol.w));
  }
  return orthogonal_result(gains, params, std::nullopt);
}

SchemeResult fdma_sum_rate(const ChannelSet& channels,
                           const SchemeParams& params, bool with_irs) {
  if (!with_irs) {
    // Orthogonal subchannels with matched filtering on the direct link: the
    // per-subchannel power and noise splits cancel, so this is exactly TDMA.
    return tdma_sum_rate(channels, params, false);
  }
  const int aided = select_aided_user(channels, params.aided_policy,
                                      params.aided_fixed_index);
  const JointSolution sol = aided_solution(channels, aided, params);
  const std::vector<double> gains =
      partial_gains(channels, aided, sol, params.fdma_beamformer);
  return orthogonal_result(gains, params, aided);
}

SchemeResult noma_sum_rate(const ChannelSet& channels,
                           const SchemeParams& params, bool with_irs) {
  if (channels.f.empty()) {
    throw std::domain_error("noma_sum_rate: no users");
  }
  if (!with_irs) {
    return noma_result(direct_gains(channels), params, std::nullopt);
  }
  const int aided = select_aided_user(channels, params.aided_policy,
                                      params.aided_fixed_index);
  const JointSolution sol = aided_solution(channels, aided, params);
  const std::vector<double> gains =
      partial_gains(channels, aided, sol, FdmaBeamformer::combined_mf);
  return noma_result(gains, params, aided);
}

SchemeResult evaluate_scheme(Scheme scheme, const ChannelSet& channels,
                             const SchemeParams& params) {
  switch (scheme) {
    case Scheme::tdma_noirs:
      return tdma_sum_rate(channels, params, false);
    case Scheme::fdma_noirs:
      return fdma_sum_rate(channels, params, false);
    case Scheme::noma_noirs:
      return noma_sum_rate(channels, params, false);
    case Scheme::fdma_irs:
      return fdma_sum_rate(channels, params, true);
    case Scheme::tdma_irs:
      return tdma_sum_rate(channels, params, true);
    case Scheme::noma_irs:
      return noma_sum_rate(channels, params, true);
  }
  throw std::logic_error("evaluate_scheme: unknown scheme");
}

}  // namespace irsmimo
