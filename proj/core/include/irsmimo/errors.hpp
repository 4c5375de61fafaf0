// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace irsmimo {

/// Thrown when a channel realization cannot support beamforming (e.g. an
/// all-zero direct link). The Monte-Carlo driver treats this as a resampleable
/// event; every other exception propagates.
class DegenerateChannelError : public std::runtime_error {
 public:
  explicit DegenerateChannelError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Configuration text that cannot be turned into a valid SimConfig.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace irsmimo
