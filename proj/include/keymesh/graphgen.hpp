#pragma once

#include <cstdint>

#include "keymesh/geometry.hpp"
#include "keymesh/graph.hpp"
#include "keymesh/keys.hpp"
#include "keymesh/params.hpp"
#include "keymesh/rng.hpp"

namespace keymesh {

/// |R_i intersect R_j| by linear merge of the two sorted rings.
std::uint32_t shared_key_count(const KeyAssignment& keys, std::uint32_t i,
                               std::uint32_t j);

/// True iff the two rings share at least `overlap` keys (early-exit merge).
bool shares_at_least(const KeyAssignment& keys, std::uint32_t i,
                     std::uint32_t j, std::uint32_t overlap);

/// Key graph: edge {i,j} iff the rings share >= overlap keys.
AdjacencyGraph key_graph(const KeyAssignment& keys, std::uint32_t overlap);

/// Geometric graph: edge {i,j} iff distance(i,j) <= radius. Uses a uniform
/// cell grid (wrapping on the torus); expected O(n + edges) for small radii.
AdjacencyGraph geometric_graph(const Placement& placement, double radius);

/// All-pairs reference implementation of geometric_graph, for cross-checks.
AdjacencyGraph geometric_graph_naive(const Placement& placement,
                                     double radius);

/// Erdos-Renyi sampler: each of the C(n,2) pairs carries an edge
/// independently with probability p.
AdjacencyGraph er_graph(std::uint32_t n, double p, RngStream rng);

/// One of the paper's composed network models: the q-composite key graph,
/// optionally intersected with a disk-model geometric graph and an
/// unreliable-link overlay.
struct NetworkModel {
  SchemeParams scheme;
  GeoParams geo;          // region FullVisibility disables the disk filter
  ChannelParams channel;  // link_active_prob 1 disables the ER overlay

  void validate() const {
    scheme.validate();
    geo.validate();
    channel.validate();
  }
};

/// Composed topology for fixed keys/placement. The unreliable-link overlay
/// draws a per-pair coin keyed by `er_key`, so the generation route cannot
/// affect which links are active. placement may be null (full visibility).
AdjacencyGraph compose_topology(const KeyAssignment& keys,
                                std::uint32_t overlap,
                                const Placement* placement, double radius,
                                double link_active_prob, std::uint64_t er_key);

struct NetworkSample {
  KeyAssignment keys;
  Placement placement;  // empty under full visibility
  AdjacencyGraph graph;
};

/// Draws keys, placement and link coins from fixed lanes of the trial
/// stream and composes the topology.
NetworkSample sample_network(const NetworkModel& model,
                             const RngStream& trial_stream);

/// Geometric graph thinned by independent per-edge keep coins: the
/// G(n, p, r, region) model the isolated-node laws are stated for.
AdjacencyGraph sample_gpr_graph(std::uint32_t n, double keep_prob,
                                double radius, RegionKind region,
                                const RngStream& trial_stream);

// Lane layout of a trial stream (shared by the static and mobile samplers).
namespace lanes {
inline constexpr std::uint64_t kKeys = 0;
inline constexpr std::uint64_t kPlacement = 1;
inline constexpr std::uint64_t kLinkCoins = 2;
inline constexpr std::uint64_t kCapture = 3;
inline constexpr std::uint64_t kSlotBase = 16;  // mobility: 2 lanes per slot
}  // namespace lanes

}  // namespace keymesh
