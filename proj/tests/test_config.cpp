// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <string>

#include "irsmimo/config_file.hpp"
#include "irsmimo/results_io.hpp"

using namespace irsmimo;

namespace {

bool same_config(const SimConfig& a, const SimConfig& b) {
  return render_config(a) == render_config(b);
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("empty config takes scenario defaults") {
  const SimConfig cfg = parse_config("");
  CHECK(cfg.users == 2);
  CHECK(cfg.drops == 10000);
  CHECK(cfg.reflectors == 200);
  CHECK(cfg.bs_antennas == 16);
  CHECK(cfg.pd_watts == 20.0);
  CHECK(cfg.bw_hz == 20e6);
  CHECK(cfg.t0_kelvin == 290.0);
  CHECK(cfg.nf_db == 9.0);
  CHECK(cfg.ao_iterations == 3);
  CHECK(cfg.base_seed == 1);
  CHECK(cfg.pathloss.p0_db == 140.72);
  CHECK(cfg.pathloss.x0_km == 0.01);
  CHECK(cfg.pathloss.x1_km == 0.05);
  CHECK(cfg.pathloss.sigma_sd_db == 8.0);
  CHECK(cfg.bs_irs.l0_db == -30.0);
  CHECK(cfg.bs_irs.alpha == 2.0);
  CHECK(cfg.bs_irs.rician_factor == 5.0);
  CHECK(cfg.geometry.irs.x == 375.0);
  CHECK(cfg.schemes.size() == 5);
  CHECK(cfg.power_policy == PowerPolicy::rank_linear);
  CHECK(cfg.aided_policy == AidedUserPolicy::weakest_direct);
  CHECK(cfg.fdma_beamformer == FdmaBeamformer::direct_mrt);
  CHECK(cfg.los_model == LosModel::random_phase);
  CHECK(!cfg.los_aod_rad.has_value());
}

TEST_CASE("config errors name the key and line") {
  CHECK_THROWS_AS(parse_config("users = 0"), ConfigError);
  CHECK(message_of([] { parse_config("users = 0"); }).find("users") !=
        std::string::npos);

  const std::string unknown = message_of([] {
    parse_config("drops = 5\nbogus_key = 3\n");
  });
  CHECK(unknown.find("bogus_key") != std::string::npos);
  CHECK(unknown.find("line 2") != std::string::npos);

  const std::string bad_value =
      message_of([] { parse_config("users = abc\n"); });
  CHECK(bad_value.find("users") != std::string::npos);
  CHECK(bad_value.find("line 1") != std::string::npos);

  CHECK_THROWS_AS(parse_config("x0_km = 0.06\n"), ConfigError);  // x0 >= x1
  CHECK_THROWS_AS(parse_config("pd_watts = -3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("power_policy = maximal\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("no equals sign here\n"), ConfigError);
}

TEST_CASE("comments, whitespace, lists, duplicates") {
  const SimConfig cfg = parse_config(
      "# leading comment\n"
      "reflectors = 200\n"
      "  drops =  12   # trailing comment\n"
      "schemes = tdma_noirs , noma_irs\n"
      "drops = 7\n");
  CHECK(cfg.reflectors == 200);
  CHECK(cfg.drops == 7);
  REQUIRE(cfg.schemes.size() == 2);
  CHECK(cfg.schemes[0] == Scheme::tdma_noirs);
  CHECK(cfg.schemes[1] == Scheme::noma_irs);
}

TEST_CASE("render/parse round trip") {
  CHECK(same_config(parse_config(render_config(SimConfig{})), SimConfig{}));

  SimConfig cfg;
  cfg.users = 16;
  cfg.drops = 123;
  cfg.base_seed = 998877;
  cfg.pd_watts = 17.25;
  cfg.ao_tolerance = 1e-6;
  cfg.power_policy = PowerPolicy::fixed_split;
  cfg.fixed_split_weak_fraction = 0.75;
  cfg.aided_policy = AidedUserPolicy::fixed_index;
  cfg.aided_fixed_index = 3;
  cfg.fdma_beamformer = FdmaBeamformer::combined_mf;
  cfg.los_model = LosModel::rank_one;
  cfg.los_aod_rad = 0.7853981633974483;
  cfg.los_aoa_rad = -2.356194490192345;
  cfg.workers = 4;
  cfg.schemes = {Scheme::fdma_irs, Scheme::noma_irs};
  cfg.geometry.edge_area.side = 111.5;
  cfg.pathloss.sigma_sd_db = 6.25;

  const SimConfig back = parse_config(render_config(cfg));
  CHECK(same_config(back, cfg));
  CHECK(back.los_aod_rad == cfg.los_aod_rad);
  CHECK(back.workers == 4);

  // execution knobs can be omitted from the render
  const std::string semantic = render_config(cfg, false);
  CHECK(semantic.find("workers") == std::string::npos);
  CHECK(parse_config(semantic).workers == 0);
}

TEST_CASE("format_double round trips") {
  for (double v : {0.05, 140.72, 20e6, 1.0 / 3.0, -30.0, 6.36e-13}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
    CHECK(s.find(',') == std::string::npos);
  }
}

TEST_CASE("results bundle on disk") {
  SimConfig cfg;
  cfg.reflectors = 8;
  cfg.bs_antennas = 3;
  cfg.drops = 3;
  cfg.schemes = {Scheme::tdma_noirs, Scheme::noma_noirs};
  const CampaignResult result = run_campaign(cfg);

  const auto dir = fresh_dir("irsmimo_results_test");
  write_results(dir, result);

  // drops.csv: header plus drops x schemes rows
  std::ifstream drops(dir / "drops.csv");
  REQUIRE(drops.good());
  std::string line;
  int rows = 0;
  std::getline(drops, line);
  CHECK(line == "drop,scheme,sum_rate_bpshz");
  while (std::getline(drops, line)) {
    if (!line.empty()) {
      ++rows;
    }
  }
  CHECK(rows == 6);

  // summary.json parses and echoes the config
  std::ifstream sj(dir / "summary.json");
  nlohmann::json j = nlohmann::json::parse(sj);
  CHECK(j["schemes"]["tdma_noirs"]["samples"] == 3);
  CHECK(j["schemes"]["noma_noirs"].contains("likely95"));
  CHECK(j["config"]["drops"] == "3");
  CHECK(!j["config"].contains("workers"));

  // CDF files end at probability one
  const std::string cdf = cdf_csv(dir, "tdma_noirs");
  CHECK(cdf.rfind(",1\n") == cdf.size() - 3);

  // identical campaign, identical bytes
  const CampaignResult again = run_campaign(cfg);
  CHECK(summary_json(result) == summary_json(again));

  // worker count must not leak into the summary bytes
  SimConfig cfg8 = cfg;
  cfg8.workers = 8;
  CHECK(summary_json(run_campaign(cfg8)) == summary_json(result));
}

TEST_CASE("report table is sorted by median") {
  SimConfig cfg;
  cfg.reflectors = 8;
  cfg.bs_antennas = 3;
  cfg.drops = 4;
  cfg.schemes = {Scheme::tdma_noirs, Scheme::noma_noirs};
  const auto dir = fresh_dir("irsmimo_report_test");
  write_results(dir, run_campaign(cfg));

  const std::string table = report_table(dir);
  CHECK(table.find("scheme") != std::string::npos);
  const auto noma_pos = table.find("noma_noirs");
  const auto tdma_pos = table.find("tdma_noirs");
  REQUIRE(noma_pos != std::string::npos);
  REQUIRE(tdma_pos != std::string::npos);
  CHECK(noma_pos < tdma_pos);  // NOMA median beats TDMA
}

TEST_CASE("results errors are descriptive") {
  const auto dir = fresh_dir("irsmimo_errs_test");
  std::filesystem::create_directories(dir);

  const std::string missing =
      message_of([&] { report_table(dir / "nowhere"); });
  CHECK(missing.find("summary.json") != std::string::npos);

  std::ofstream(dir / "summary.json") << "{ not json";
  const std::string corrupt = message_of([&] { report_table(dir); });
  CHECK(corrupt.find("summary.json") != std::string::npos);

  SimConfig cfg;
  cfg.reflectors = 4;
  cfg.bs_antennas = 2;
  cfg.drops = 2;
  cfg.schemes = {Scheme::tdma_noirs};
  const auto ok_dir = fresh_dir("irsmimo_cdf_err_test");
  write_results(ok_dir, run_campaign(cfg));
  const std::string unknown =
      message_of([&] { cdf_csv(ok_dir, "warp_drive"); });
  CHECK(unknown.find("warp_drive") != std::string::npos);
  CHECK(unknown.find("tdma_noirs") != std::string::npos);
}

TEST_CASE("apply_override") {
  SimConfig cfg;
  apply_override(cfg, "drops", "42");
  CHECK(cfg.drops == 42);
  apply_override(cfg, "rician_factor", "2.5");
  CHECK(cfg.bs_irs.rician_factor == 2.5);
  CHECK_THROWS_AS(apply_override(cfg, "nonsense", "1"), ConfigError);
}
