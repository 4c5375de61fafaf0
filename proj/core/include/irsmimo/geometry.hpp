// Copyright (c) 2026 irsmimo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "irsmimo/errors.hpp"

namespace irsmimo {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Axis-aligned square given by its lower-left corner and side length (m).
struct Square {
  Point2 corner;
  double side = 0.0;

  bool contains(const Point2& p) const {
    return p.x >= corner.x && p.x <= corner.x + side && p.y >= corner.y &&
           p.y <= corner.y + side;
  }
};

/// Deployment geometry: BS and IRS positions plus the two user drop areas.
struct Geometry {
  Point2 bs;
  Point2 irs;
  Square center_area;
  Square edge_area;

  void validate() const {
    if (!(center_area.side > 0.0) || !(edge_area.side > 0.0)) {
      throw ConfigError("geometry: area side lengths must be positive");
    }
    if (!std::isfinite(bs.x) || !std::isfinite(bs.y) ||
        !std::isfinite(irs.x) || !std::isfinite(irs.y)) {
      throw ConfigError("geometry: positions must be finite");
    }
  }
};

}  // namespace irsmimo
