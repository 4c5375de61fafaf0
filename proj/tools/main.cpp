// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: run Monte-Carlo campaigns, report percentile
// summaries, and dump per-scheme CDFs for external plotting.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "irsmimo/config_file.hpp"
#include "irsmimo/errors.hpp"
#include "irsmimo/montecarlo.hpp"
#include "irsmimo/results_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw irsmimo::ConfigError("cannot read config file: " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunOptions {
  std::string config_path;
  std::string out_dir = "results";
  std::vector<std::string> overrides;
  int drops = -1;
  std::int64_t seed = -1;
  int users = -1;
  std::string schemes;
};

irsmimo::SimConfig resolve_config(const RunOptions& opt) {
  irsmimo::SimConfig cfg;
  if (!opt.config_path.empty()) {
    cfg = irsmimo::parse_config(read_text_file(opt.config_path));
  }
  for (const std::string& kv : opt.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw irsmimo::ConfigError("--set expects key=value, got '" + kv + "'");
    }
    irsmimo::apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (opt.drops >= 0) {
    irsmimo::apply_override(cfg, "drops", std::to_string(opt.drops));
  }
  if (opt.seed >= 0) {
    irsmimo::apply_override(cfg, "seed", std::to_string(opt.seed));
  }
  if (opt.users >= 0) {
    irsmimo::apply_override(cfg, "users", std::to_string(opt.users));
  }
  if (!opt.schemes.empty()) {
    irsmimo::apply_override(cfg, "schemes", opt.schemes);
  }
  cfg.validate();
  return cfg;
}

int cmd_run(const RunOptions& opt) {
  irsmimo::SimConfig cfg;
  try {
    cfg = resolve_config(opt);
  } catch (const irsmimo::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  std::cout << "# effective configuration\n"
            << irsmimo::render_config(cfg) << std::flush;
  try {
    const irsmimo::CampaignResult result = irsmimo::run_campaign(cfg);
    irsmimo::write_results(opt.out_dir, result);
    std::cout << "\nwrote " << opt.out_dir << "/drops.csv, summary.json, "
              << "cdf_<scheme>.csv\n\n"
              << irsmimo::report_table(opt.out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}

int cmd_report(const std::string& dir) {
  try {
    std::cout << irsmimo::report_table(dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}

int cmd_cdf(const std::string& dir, const std::string& scheme) {
  try {
    std::cout << irsmimo::cdf_csv(dir, scheme);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "irsmimo - Monte-Carlo link-level simulator for IRS-aided "
      "multi-user MIMO downlink"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand(
      "run", "Run a campaign and write drops.csv / summary.json / CDFs");
  run->add_option("--config", run_opt.config_path,
                  "Config file (key = value lines, '#' comments)");
  run->add_option("--out", run_opt.out_dir, "Output directory")
      ->capture_default_str();
  run->add_option("--drops", run_opt.drops, "Override drop count");
  run->add_option("--seed", run_opt.seed, "Override base seed");
  run->add_option("--users", run_opt.users, "Override user count");
  run->add_option("--schemes", run_opt.schemes,
                  "Override scheme list (comma separated)");
  run->add_option("--set", run_opt.overrides,
                  "Override any config key (key=value, repeatable)");

  std::string report_dir;
  CLI::App* report = app.add_subcommand(
      "report", "Print the per-scheme percentile table for a results dir");
  report->add_option("dir", report_dir, "Results directory")->required();

  std::string cdf_dir;
  std::string cdf_scheme;
  CLI::App* cdf = app.add_subcommand(
      "cdf", "Print the stored CDF CSV of one scheme to stdout");
  cdf->add_option("dir", cdf_dir, "Results directory")->required();
  cdf->add_option("scheme", cdf_scheme, "Scheme name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  if (run->parsed()) {
    return cmd_run(run_opt);
  }
  if (report->parsed()) {
    return cmd_report(report_dir);
  }
  if (cdf->parsed()) {
    return cmd_cdf(cdf_dir, cdf_scheme);
  }
  return kExitConfigError;
}
