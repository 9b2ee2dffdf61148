#pragma once

#include <cstdint>
#include <vector>

#include "keymesh/params.hpp"
#include "keymesh/rng.hpp"

namespace keymesh {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Node coordinates in [0,1)^2. Empty for full-visibility settings.
struct Placement {
  RegionKind region = RegionKind::UnitTorus;
  std::vector<Point> points;

  std::uint32_t node_count() const {
    return static_cast<std::uint32_t>(points.size());
  }
};

/// Uniform i.i.d. deployment of `count` nodes on the unit region.
Placement place_nodes(std::uint32_t count, const GeoParams& geo, RngStream rng);

/// Euclidean distance on the square; wrap-around distance on the torus
/// (per-axis displacement min(|d|, 1-|d|)).
double distance(const Point& a, const Point& b, RegionKind region);

}  // namespace keymesh
