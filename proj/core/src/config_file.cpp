// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#include "irsmimo/config_file.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <system_error>

#include "irsmimo/errors.hpp"
#include "irsmimo/montecarlo.hpp"

namespace irsmimo {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("invalid number for key '" + key + "': " + value);
  }
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  int out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("invalid integer for key '" + key + "': " + value);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("invalid seed for key '" + key + "': " + value);
  }
  return out;
}

std::vector<Scheme> parse_scheme_list(const std::string& value) {
  std::vector<Scheme> schemes;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) {
      continue;
    }
    schemes.push_back(parse_scheme(item));
  }
  if (schemes.empty()) {
    throw ConfigError("schemes list is empty");
  }
  return schemes;
}

std::string scheme_list_string(const std::vector<Scheme>& schemes) {
  std::string out;
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += scheme_name(schemes[i]);
  }
  return out;
}

AidedUserPolicy parse_aided_policy(const std::string& v) {
  if (v == "weakest_direct") return AidedUserPolicy::weakest_direct;
  if (v == "strongest_direct") return AidedUserPolicy::strongest_direct;
  if (v == "nearest_irs") return AidedUserPolicy::nearest_irs;
  if (v == "fixed_index") return AidedUserPolicy::fixed_index;
  throw ConfigError("unknown aided_user_policy: " + v);
}

std::string aided_policy_name(AidedUserPolicy p) {
  switch (p) {
    case AidedUserPolicy::weakest_direct: return "weakest_direct";
    case AidedUserPolicy::strongest_direct: return "strongest_direct";
    case AidedUserPolicy::nearest_irs: return "nearest_irs";
    case AidedUserPolicy::fixed_index: return "fixed_index";
  }
  return "weakest_direct";
}

PowerPolicy parse_power_policy(const std::string& v) {
  if (v == "rank_linear") return PowerPolicy::rank_linear;
  if (v == "inverse_gain") return PowerPolicy::inverse_gain;
  if (v == "fixed_split") return PowerPolicy::fixed_split;
  throw ConfigError("unknown power_policy: " + v);
}

std::string power_policy_name(PowerPolicy p) {
  switch (p) {
    case PowerPolicy::rank_linear: return "rank_linear";
    case PowerPolicy::inverse_gain: return "inverse_gain";
    case PowerPolicy::fixed_split: return "fixed_split";
  }
  return "rank_linear";
}

FdmaBeamformer parse_fdma_beamformer(const std::string& v) {
  if (v == "direct_mrt") return FdmaBeamformer::direct_mrt;
  if (v == "combined_mf") return FdmaBeamformer::combined_mf;
  throw ConfigError("unknown fdma_beamformer: " + v);
}

std::string fdma_beamformer_name(FdmaBeamformer b) {
  return b == FdmaBeamformer::direct_mrt ? "direct_mrt" : "combined_mf";
}

LosModel parse_los_model(const std::string& v) {
  if (v == "random_phase") return LosModel::random_phase;
  if (v == "rank_one") return LosModel::rank_one;
  throw ConfigError("unknown los_model: " + v);
}

std::string los_model_name(LosModel m) {
  return m == LosModel::random_phase ? "random_phase" : "rank_one";
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) {
    throw std::runtime_error("format_double failed");
  }
  return std::string(buf, ptr);
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::tdma_noirs: return "tdma_noirs";
    case Scheme::fdma_noirs: return "fdma_noirs";
    case Scheme::noma_noirs: return "noma_noirs";
    case Scheme::fdma_irs: return "fdma_irs";
    case Scheme::tdma_irs: return "tdma_irs";
    case Scheme::noma_irs: return "noma_irs";
  }
  return "unknown";
}

Scheme parse_scheme(const std::string& name) {
  if (name == "tdma_noirs") return Scheme::tdma_noirs;
  if (name == "fdma_noirs") return Scheme::fdma_noirs;
  if (name == "noma_noirs") return Scheme::noma_noirs;
  if (name == "fdma_irs") return Scheme::fdma_irs;
  if (name == "tdma_irs") return Scheme::tdma_irs;
  if (name == "noma_irs") return Scheme::noma_irs;
  throw ConfigError("unknown scheme: " + name);
}

void apply_override(SimConfig& cfg, const std::string& key,
                    const std::string& value) {
  if (key == "users") {
    cfg.users = parse_int(key, value);
  } else if (key == "reflectors") {
    cfg.reflectors = parse_int(key, value);
  } else if (key == "bs_antennas") {
    cfg.bs_antennas = parse_int(key, value);
  } else if (key == "pd_watts") {
    cfg.pd_watts = parse_number(key, value);
  } else if (key == "bandwidth_hz") {
    cfg.bw_hz = parse_number(key, value);
  } else if (key == "t0_kelvin") {
    cfg.t0_kelvin = parse_number(key, value);
  } else if (key == "noise_figure_db") {
    cfg.nf_db = parse_number(key, value);
  } else if (key == "drops") {
    cfg.drops = parse_int(key, value);
  } else if (key == "ao_iterations") {
    cfg.ao_iterations = parse_int(key, value);
  } else if (key == "ao_tolerance") {
    cfg.ao_tolerance = parse_number(key, value);
  } else if (key == "seed") {
    cfg.base_seed = parse_u64(key, value);
  } else if (key == "schemes") {
    cfg.schemes = parse_scheme_list(value);
  } else if (key == "aided_user_policy") {
    cfg.aided_policy = parse_aided_policy(value);
  } else if (key == "aided_fixed_index") {
    cfg.aided_fixed_index = parse_int(key, value);
  } else if (key == "power_policy") {
    cfg.power_policy = parse_power_policy(value);
  } else if (key == "fixed_split_weak_fraction") {
    cfg.fixed_split_weak_fraction = parse_number(key, value);
  } else if (key == "fdma_beamformer") {
    cfg.fdma_beamformer = parse_fdma_beamformer(value);
  } else if (key == "los_model") {
    cfg.los_model = parse_los_model(value);
  } else if (key == "los_aod_rad") {
    cfg.los_aod_rad = parse_number(key, value);
  } else if (key == "los_aoa_rad") {
    cfg.los_aoa_rad = parse_number(key, value);
  } else if (key == "workers") {
    cfg.workers = parse_int(key, value);
  } else if (key == "bs_x") {
    cfg.geometry.bs.x = parse_number(key, value);
  } else if (key == "bs_y") {
    cfg.geometry.bs.y = parse_number(key, value);
  } else if (key == "irs_x") {
    cfg.geometry.irs.x = parse_number(key, value);
  } else if (key == "irs_y") {
    cfg.geometry.irs.y = parse_number(key, value);
  } else if (key == "center_x") {
    cfg.geometry.center_area.corner.x = parse_number(key, value);
  } else if (key == "center_y") {
    cfg.geometry.center_area.corner.y = parse_number(key, value);
  } else if (key == "center_side") {
    cfg.geometry.center_area.side = parse_number(key, value);
  } else if (key == "edge_x") {
    cfg.geometry.edge_area.corner.x = parse_number(key, value);
  } else if (key == "edge_y") {
    cfg.geometry.edge_area.corner.y = parse_number(key, value);
  } else if (key == "edge_side") {
    cfg.geometry.edge_area.side = parse_number(key, value);
  } else if (key == "p0_db") {
    cfg.pathloss.p0_db = parse_number(key, value);
  } else if (key == "x0_km") {
    cfg.pathloss.x0_km = parse_number(key, value);
  } else if (key == "x1_km") {
    cfg.pathloss.x1_km = parse_number(key, value);
  } else if (key == "shadowing_db") {
    cfg.pathloss.sigma_sd_db = parse_number(key, value);
  } else if (key == "l0_db") {
    cfg.bs_irs.l0_db = parse_number(key, value);
  } else if (key == "pathloss_exponent") {
    cfg.bs_irs.alpha = parse_number(key, value);
  } else if (key == "rician_factor") {
    cfg.bs_irs.rician_factor = parse_number(key, value);
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

SimConfig parse_config(const std::string& text) {
  SimConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }
    try {
      apply_override(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  cfg.validate();
  return cfg;
}

std::vector<std::pair<std::string, std::string>> config_entries(
    const SimConfig& cfg, bool include_execution) {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("users", std::to_string(cfg.users));
  kv.emplace_back("reflectors", std::to_string(cfg.reflectors));
  kv.emplace_back("bs_antennas", std::to_string(cfg.bs_antennas));
  kv.emplace_back("pd_watts", format_double(cfg.pd_watts));
  kv.emplace_back("bandwidth_hz", format_double(cfg.bw_hz));
  kv.emplace_back("t0_kelvin", format_double(cfg.t0_kelvin));
  kv.emplace_back("noise_figure_db", format_double(cfg.nf_db));
  kv.emplace_back("drops", std::to_string(cfg.drops));
  kv.emplace_back("ao_iterations", std::to_string(cfg.ao_iterations));
  kv.emplace_back("ao_tolerance", format_double(cfg.ao_tolerance));
  kv.emplace_back("seed", std::to_string(cfg.base_seed));
  kv.emplace_back("schemes", scheme_list_string(cfg.schemes));
  kv.emplace_back("aided_user_policy", aided_policy_name(cfg.aided_policy));
  kv.emplace_back("aided_fixed_index",
                  std::to_string(cfg.aided_fixed_index));
  kv.emplace_back("power_policy", power_policy_name(cfg.power_policy));
  kv.emplace_back("fixed_split_weak_fraction",
                  format_double(cfg.fixed_split_weak_fraction));
  kv.emplace_back("fdma_beamformer",
                  fdma_beamformer_name(cfg.fdma_beamformer));
  kv.emplace_back("los_model", los_model_name(cfg.los_model));
  if (cfg.los_aod_rad) {
    kv.emplace_back("los_aod_rad", format_double(*cfg.los_aod_rad));
  }
  if (cfg.los_aoa_rad) {
    kv.emplace_back("los_aoa_rad", format_double(*cfg.los_aoa_rad));
  }
  if (include_execution) {
    kv.emplace_back("workers", std::to_string(cfg.workers));
  }
  kv.emplace_back("bs_x", format_double(cfg.geometry.bs.x));
  kv.emplace_back("bs_y", format_double(cfg.geometry.bs.y));
  kv.emplace_back("irs_x", format_double(cfg.geometry.irs.x));
  kv.emplace_back("irs_y", format_double(cfg.geometry.irs.y));
  kv.emplace_back("center_x", format_double(cfg.geometry.center_area.corner.x));
  kv.emplace_back("center_y", format_double(cfg.geometry.center_area.corner.y));
  kv.emplace_back("center_side", format_double(cfg.geometry.center_area.side));
  kv.emplace_back("edge_x", format_double(cfg.geometry.edge_area.corner.x));
  kv.emplace_back("edge_y", format_double(cfg.geometry.edge_area.corner.y));
  kv.emplace_back("edge_side", format_double(cfg.geometry.edge_area.side));
  kv.emplace_back("p0_db", format_double(cfg.pathloss.p0_db));
  kv.emplace_back("x0_km", format_double(cfg.pathloss.x0_km));
  kv.emplace_back("x1_km", format_double(cfg.pathloss.x1_km));
  kv.emplace_back("shadowing_db", format_double(cfg.pathloss.sigma_sd_db));
  kv.emplace_back("l0_db", format_double(cfg.bs_irs.l0_db));
  kv.emplace_back("pathloss_exponent", format_double(cfg.bs_irs.alpha));
  kv.emplace_back("rician_factor", format_double(cfg.bs_irs.rician_factor));
  return kv;
}

std::string render_config(const SimConfig& cfg, bool include_execution) {
  std::string out;
  for (const auto& [key, value] : config_entries(cfg, include_execution)) {
    out += key;
    out += " = ";
    out += value;
    out += "\n";
  }
  return out;
}

}  // namespace irsmimo
