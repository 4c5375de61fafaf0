// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>

#include "irsmimo/montecarlo.hpp"

namespace irsmimo {

/// Write drops.csv, summary.json and one cdf_<scheme>.csv per scheme into
/// `dir` (created if needed). Output bytes are deterministic for a given
/// campaign result.
void write_results(const std::filesystem::path& dir,
                   const CampaignResult& result);

/// summary.json content for a campaign (stable key order, full precision).
std::string summary_json(const CampaignResult& result);

/// Human-readable per-scheme table from a results directory, schemes sorted
/// by median rate descending.
std::string report_table(const std::filesystem::path& dir);

/// The stored CDF CSV for one scheme. Unknown schemes raise an error that
/// lists the available ones.
std::string cdf_csv(const std::filesystem::path& dir,
                    const std::string& scheme);

}  // namespace irsmimo
