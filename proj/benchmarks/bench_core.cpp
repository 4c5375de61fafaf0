// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "irsmimo/channel.hpp"
#include "irsmimo/montecarlo.hpp"
#include "irsmimo/reflect.hpp"

namespace {

using namespace irsmimo;

SimConfig reference_config() {
  SimConfig cfg;
  cfg.schemes = {Scheme::tdma_noirs, Scheme::noma_noirs, Scheme::fdma_irs,
                 Scheme::tdma_irs, Scheme::noma_irs};
  return cfg;
}

void BM_RealizeDrop(benchmark::State& state) {
  const SimConfig cfg = reference_config();
  Rng rng(1);
  const auto users = place_users(rng, cfg.geometry, cfg.users);
  for (auto _ : state) {
    Rng drop_rng(mix_seed(1, state.iterations()));
    benchmark::DoNotOptimize(realize_drop(drop_rng, cfg, users));
  }
}
BENCHMARK(BM_RealizeDrop);

void BM_AlternatingOptimize(benchmark::State& state) {
  const SimConfig cfg = reference_config();
  Rng rng(2);
  const auto users = place_users(rng, cfg.geometry, cfg.users);
  const ChannelSet ch = realize_drop(rng, cfg, users);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        alternating_optimize(ch.g[0], ch.h_mat, ch.f[0], 3));
  }
}
BENCHMARK(BM_AlternatingOptimize);

void BM_RunDrop(benchmark::State& state) {
  const SimConfig cfg = reference_config();
  int drop = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_drop(drop++, cfg));
  }
}
BENCHMARK(BM_RunDrop);

void BM_Campaign(benchmark::State& state) {
  SimConfig cfg = reference_config();
  cfg.drops = static_cast<int>(state.range(0));
  cfg.workers = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_campaign(cfg));
  }
  state.SetItemsProcessed(state.iterations() * cfg.drops);
}
BENCHMARK(BM_Campaign)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
