#include "keymesh/keys.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace keymesh {

std::vector<std::uint32_t> sample_subset(std::uint32_t universe,
                                         std::uint32_t m, RngStream& rng) {
  std::vector<std::uint32_t> out;
  out.reserve(m);
  if (m == universe) {
    out.resize(m);
    std::iota(out.begin(), out.end(), 0u);
    return out;
  }
  if (m > universe / 2) {
    // Dense draw: partial Fisher-Yates over the whole universe.
    std::vector<std::uint32_t> pool(universe);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::uint32_t i = 0; i < m; ++i) {
      const auto j = i + static_cast<std::uint32_t>(rng.next_below(universe - i));
      std::swap(pool[i], pool[j]);
    }
    out.assign(pool.begin(), pool.begin() + m);
  } else {
    // Floyd's subset sampling: m draws, no rejection loop growth.
    std::unordered_set<std::uint32_t> seen;
    seen.reserve(m * 2);
    for (std::uint32_t j = universe - m; j < universe; ++j) {
      const auto t = static_cast<std::uint32_t>(rng.next_below(j + 1));
      if (!seen.insert(t).second) seen.insert(j);
    }
    out.assign(seen.begin(), seen.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

KeyAssignment assign_keys(const SchemeParams& params, RngStream rng) {
  params.validate();
  KeyAssignment assignment;
  assignment.ring_size = params.ring_size;
  assignment.pool_size = params.pool_size;
  assignment.keys.reserve(static_cast<std::size_t>(params.node_count) *
                          params.ring_size);
  for (std::uint32_t node = 0; node < params.node_count; ++node) {
    const auto ring = sample_subset(params.pool_size, params.ring_size, rng);
    assignment.keys.insert(assignment.keys.end(), ring.begin(), ring.end());
  }
  return assignment;
}

}  // namespace keymesh
