#include "keymesh/geometry.hpp"

#include <cmath>

namespace keymesh {

Placement place_nodes(std::uint32_t count, const GeoParams& geo,
                      RngStream rng) {
  if (geo.region == RegionKind::FullVisibility)
    throw std::invalid_argument("place_nodes: undefined under full visibility");
  Placement placement;
  placement.region = geo.region;
  placement.points.resize(count);
  for (auto& p : placement.points) {
    p.x = rng.next_unit();
    p.y = rng.next_unit();
  }
  return placement;
}

double distance(const Point& a, const Point& b, RegionKind region) {
  double dx = std::fabs(a.x - b.x);
  double dy = std::fabs(a.y - b.y);
  if (region == RegionKind::UnitTorus) {
    dx = std::min(dx, 1.0 - dx);
    dy = std::min(dy, 1.0 - dy);
  }
  return std::hypot(dx, dy);
}

}  // namespace keymesh
