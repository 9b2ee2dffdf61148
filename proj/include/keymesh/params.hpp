#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace keymesh {

/// Parameters of the q-composite key predistribution scheme: each of the
/// n sensors is preloaded with a ring of K distinct keys drawn uniformly
/// from a pool of P keys, and a secure link requires at least q shared keys.
struct SchemeParams {
  std::uint32_t node_count = 0;  // n
  std::uint32_t ring_size = 0;   // K
  std::uint32_t pool_size = 0;   // P
  std::uint32_t overlap = 1;     // q

  void validate() const {
    if (node_count < 1)
      throw std::invalid_argument("SchemeParams: node_count must be >= 1");
    if (overlap < 1 || overlap > ring_size || ring_size > pool_size)
      throw std::invalid_argument("SchemeParams: need 1 <= q <= K <= P");
  }
};

/// Deployment region. FullVisibility means every pair of nodes has a
/// potential communication link regardless of position.
enum class RegionKind { UnitTorus, UnitSquare, FullVisibility };

inline const char* region_name(RegionKind r) {
  switch (r) {
    case RegionKind::UnitTorus: return "torus";
    case RegionKind::UnitSquare: return "square";
    case RegionKind::FullVisibility: return "full";
  }
  return "?";
}

/// Disk-model geometry: nodes communicate iff within `radius` of each other
/// on the unit-area region. Radius is measured in unit-square side lengths.
struct GeoParams {
  RegionKind region = RegionKind::FullVisibility;
  double radius = 0.0;

  void validate() const {
    if (region == RegionKind::FullVisibility) return;
    if (!(radius > 0.0))
      throw std::invalid_argument("GeoParams: radius must be positive");
    if (radius > std::sqrt(2.0))
      throw std::invalid_argument("GeoParams: radius exceeds region diameter");
  }
};

/// Link unreliability: each topological link is independently active with
/// probability `link_active_prob` (the paper's t).
struct ChannelParams {
  double link_active_prob = 1.0;

  void validate() const {
    if (!(link_active_prob > 0.0) || link_active_prob > 1.0)
      throw std::invalid_argument("ChannelParams: need 0 < t <= 1");
  }
};

/// Which of the studied network variants an experiment runs on.
struct SettingSpec {
  RegionKind visibility = RegionKind::FullVisibility;
  bool unreliable = false;
  bool mobile = false;

  void validate() const {
    if (visibility == RegionKind::FullVisibility && (unreliable || mobile))
      throw std::invalid_argument(
          "SettingSpec: full visibility excludes unreliable/mobile variants");
  }
};

}  // namespace keymesh
