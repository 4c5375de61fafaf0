// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#include "irsmimo/results_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "irsmimo/config_file.hpp"
#include "irsmimo/errors.hpp"

namespace irsmimo {

namespace {

void write_file(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  out << data;
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open: " + path.string());
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json load_summary(const std::filesystem::path& dir) {
  const auto path = dir / "summary.json";
  const std::string text = read_file(path);
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.contains("schemes")) {
    throw std::runtime_error("corrupt summary file: " + path.string());
  }
  return j;
}

}  // namespace

std::string summary_json(const CampaignResult& result) {
  nlohmann::json j;
  for (const auto& [key, value] :
       config_entries(result.config, /*include_execution=*/false)) {
    j["config"][key] = value;
  }
  for (const auto& [scheme, summary] : result.summaries) {
    nlohmann::json s;
    s["samples"] = summary.samples;
    s["likely95"] = summary.likely95;
    s["likely50"] = summary.likely50;
    s["mean"] = summary.mean;
    j["schemes"][scheme_name(scheme)] = s;
  }
  j["resampled_drops"] = result.resampled_drops;
  return j.dump(2) + "\n";
}

void write_results(const std::filesystem::path& dir,
                   const CampaignResult& result) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory: " +
                             dir.string() + " (" + ec.message() + ")");
  }

  std::string drops = "drop,scheme,sum_rate_bpshz\n";
  for (const DropResult& dr : result.drops) {
    for (Scheme s : result.config.schemes) {
      drops += std::to_string(dr.drop_index);
      drops += ",";
      drops += scheme_name(s);
      drops += ",";
      drops += format_double(dr.results.at(s).sum_rate);
      drops += "\n";
    }
  }
  write_file(dir / "drops.csv", drops);

  write_file(dir / "summary.json", summary_json(result));

  for (const auto& [scheme, samples] : result.sorted_sum_rates) {
    std::string csv = "rate_bpshz,cum_prob\n";
    for (const CdfPoint& p : empirical_cdf(samples)) {
      csv += format_double(p.rate);
      csv += ",";
      csv += format_double(p.cumulative_probability);
      csv += "\n";
    }
    write_file(dir / ("cdf_" + scheme_name(scheme) + ".csv"), csv);
  }
}

std::string report_table(const std::filesystem::path& dir) {
  const nlohmann::json j = load_summary(dir);
  struct Row {
    std::string name;
    double likely50;
    double likely95;
    double mean;
    int samples;
  };
  std::vector<Row> rows;
  for (const auto& [name, s] : j.at("schemes").items()) {
    rows.push_back({name, s.at("likely50").get<double>(),
                    s.at("likely95").get<double>(), s.at("mean").get<double>(),
                    s.at("samples").get<int>()});
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.likely50 > b.likely50; });

  std::ostringstream out;
  out << std::left << std::setw(14) << "scheme" << std::right << std::setw(12)
      << "50%-likely" << std::setw(12) << "95%-likely" << std::setw(12)
      << "mean" << std::setw(10) << "samples" << "\n";
  out << std::fixed << std::setprecision(2);
  for (const Row& r : rows) {
    out << std::left << std::setw(14) << r.name << std::right << std::setw(12)
        << r.likely50 << std::setw(12) << r.likely95 << std::setw(12) << r.mean
        << std::setw(10) << r.samples << "\n";
  }
  return out.str();
}

std::string cdf_csv(const std::filesystem::path& dir,
                    const std::string& scheme) {
  const nlohmann::json j = load_summary(dir);
  if (!j.at("schemes").contains(scheme)) {
    std::string available;
    for (const auto& [name, s] : j.at("schemes").items()) {
      if (!available.empty()) {
        available += ", ";
      }
      available += name;
    }
    throw std::runtime_error("unknown scheme '" + scheme +
                             "'; available: " + available);
  }
  return read_file(dir / ("cdf_" + scheme + ".csv"));
}

}  // namespace irsmimo
