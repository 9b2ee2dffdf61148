#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "keymesh/params.hpp"
#include "keymesh/rng.hpp"

namespace keymesh {

/// Per-node key rings in canonical form: node i's ring is the slice
/// [i*ring_size, (i+1)*ring_size), sorted ascending, all ids distinct and
/// in [0, pool_size).
struct KeyAssignment {
  std::uint32_t ring_size = 0;
  std::uint32_t pool_size = 0;
  std::vector<std::uint32_t> keys;

  std::uint32_t node_count() const {
    return ring_size == 0 ? 0
                          : static_cast<std::uint32_t>(keys.size() / ring_size);
  }

  std::span<const std::uint32_t> ring(std::uint32_t node) const {
    return std::span<const std::uint32_t>(keys)
        .subspan(static_cast<std::size_t>(node) * ring_size, ring_size);
  }
};

/// Draws an independent uniform K-subset of the pool for every node.
KeyAssignment assign_keys(const SchemeParams& params, RngStream rng);

/// Uniform m-subset of [0, universe), sorted ascending. Expected O(m) work.
std::vector<std::uint32_t> sample_subset(std::uint32_t universe,
                                         std::uint32_t m, RngStream& rng);

}  // namespace keymesh
