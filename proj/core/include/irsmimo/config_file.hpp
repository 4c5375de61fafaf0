// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "irsmimo/sim_config.hpp"

namespace irsmimo {

/// Parse flat "key = value" text ('#' starts a comment) into a SimConfig.
/// Missing keys take the built-in scenario defaults; unknown keys, malformed
/// values, and invariant violations raise ConfigError naming key and line.
SimConfig parse_config(const std::string& text);

/// Render a SimConfig as config text that parse_config maps back to the
/// identical config. With include_execution = false, execution-only knobs
/// (currently `workers`) are omitted; results do not depend on them.
std::string render_config(const SimConfig& cfg, bool include_execution = true);

/// The key/value pairs render_config would emit, in emission order.
std::vector<std::pair<std::string, std::string>> config_entries(
    const SimConfig& cfg, bool include_execution = true);

/// Apply one "key=value" override on top of an existing config.
void apply_override(SimConfig& cfg, const std::string& key,
                    const std::string& value);

/// Locale-independent shortest round-trip formatting of a double.
std::string format_double(double v);

}  // namespace irsmimo
