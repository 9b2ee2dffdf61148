#include "keymesh/attack.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "keymesh/edge_prob.hpp"

namespace keymesh {

CaptureState capture(const CaptureStrategy& strategy,
                     const KeyAssignment& keys, const Placement* placement,
                     RngStream rng) {
  const std::uint32_t n = keys.node_count();
  CaptureState state;
  state.captured_mask.assign(n, 0);
  state.compromised_keys.assign(keys.pool_size, 0);

  if (const auto* random = std::get_if<RandomCapture>(&strategy)) {
    if (random->count > n)
      throw std::invalid_argument("capture: m exceeds node count");
    state.captured = sample_subset(n, random->count, rng);
  } else if (const auto* chosen = std::get_if<ChosenCapture>(&strategy)) {
    state.captured = chosen->nodes;
    std::sort(state.captured.begin(), state.captured.end());
    if (std::adjacent_find(state.captured.begin(), state.captured.end()) !=
        state.captured.end())
      throw std::invalid_argument("capture: duplicate node in chosen set");
    if (!state.captured.empty() && state.captured.back() >= n)
      throw std::invalid_argument("capture: node id out of range");
  } else {
    const auto& band = std::get<BandCapture>(strategy);
    if (placement == nullptr)
      throw std::invalid_argument("capture: band capture needs a placement");
    if (band.x_low < 0.0 || band.x_high > 1.0 || band.x_low > band.x_high)
      throw std::invalid_argument("capture: need 0 <= x_low <= x_high <= 1");
    for (std::uint32_t v = 0; v < n; ++v) {
      const double x = placement->points[v].x;
      if (x >= band.x_low && x <= band.x_high) state.captured.push_back(v);
    }
  }

  for (const auto v : state.captured) {
    state.captured_mask[v] = 1;
    for (const auto key : keys.ring(v)) {
      if (!state.compromised_keys[key]) {
        state.compromised_keys[key] = 1;
        ++state.compromised_key_count;
      }
    }
  }
  return state;
}

bool link_compromised(std::uint32_t i, std::uint32_t j,
                      const KeyAssignment& keys, const CaptureState& state) {
  if (state.is_captured(i) || state.is_captured(j))
    throw std::invalid_argument("link_compromised: endpoint is captured");
  const auto a = keys.ring(i);
  const auto b = keys.ring(j);
  std::size_t x = 0, y = 0;
  bool any_shared = false;
  while (x < a.size() && y < b.size()) {
    if (a[x] < b[y]) {
      ++x;
    } else if (a[x] > b[y]) {
      ++y;
    } else {
      any_shared = true;
      if (!state.key_known(a[x])) return false;
      ++x;
      ++y;
    }
  }
  if (!any_shared)
    throw std::invalid_argument("link_compromised: nodes share no key");
  return true;
}

ResilienceReport measure_resilience(const AdjacencyGraph& graph,
                                    const KeyAssignment& keys,
                                    const CaptureState& state) {
  ResilienceReport report;
  report.tau = state.compromised_key_count;
  for (std::uint32_t i = 0; i < graph.node_count(); ++i) {
    if (state.is_captured(i)) continue;
    for (const auto j : graph.neighbors(i)) {
      if (i >= j || state.is_captured(j)) continue;
      ++report.secure_links;
      if (link_compromised(i, j, keys, state)) ++report.compromised_links;
    }
  }
  if (report.secure_links > 0)
    report.compromised_fraction = static_cast<double>(report.compromised_links) /
                                  static_cast<double>(report.secure_links);
  return report;
}

double analytic_p_compromised_tau(const SchemeParams& scheme,
                                  std::uint64_t tau) {
  scheme.validate();
  if (tau > scheme.pool_size)
    throw std::invalid_argument("analytic_p_compromised_tau: tau > P");
  const auto pmf = ring_overlap_pmf(scheme.ring_size, scheme.pool_size);
  double pq = 0.0;
  for (std::uint32_t u = scheme.overlap; u <= scheme.ring_size; ++u)
    pq += pmf[u];
  if (pq <= 0.0) return 0.0;
  double total = 0.0;
  for (std::uint32_t u = scheme.overlap; u <= scheme.ring_size; ++u) {
    if (u > tau) break;  // C(tau, u) = 0 beyond tau
    total += binomial_ratio(tau, scheme.pool_size, u) * pmf[u];
  }
  return total / pq;
}

double p_comp_upper_bound(const SchemeParams& scheme, std::uint32_t m) {
  scheme.validate();
  if (scheme.pool_size <= scheme.ring_size)
    throw std::invalid_argument("p_comp_upper_bound: need P > K");
  const double base =
      static_cast<double>(m) * scheme.ring_size /
      (static_cast<double>(scheme.pool_size) - scheme.ring_size);
  return std::pow(base, static_cast<double>(scheme.overlap));
}

double p_comp_asymptotic_random(const SchemeParams& scheme, std::uint32_t m) {
  scheme.validate();
  const double base = static_cast<double>(m) * scheme.ring_size /
                      static_cast<double>(scheme.pool_size);
  return std::pow(base, static_cast<double>(scheme.overlap));
}

double f_of_q(std::uint32_t overlap, std::uint32_t m,
              std::uint32_t ring_size) {
  if (overlap < 1 || ring_size < 1)
    throw std::invalid_argument("f_of_q: need q >= 1 and K >= 1");
  double value = 1.0;
  const double ratio = static_cast<double>(m) / ring_size;
  for (std::uint32_t i = 1; i <= overlap; ++i)
    value *= ratio * static_cast<double>(i);
  return value;
}

std::vector<std::uint32_t> optimal_q(std::uint32_t m,
                                     std::uint32_t ring_size) {
  if (m < 1 || ring_size < 1)
    throw std::invalid_argument("optimal_q: need m >= 1 and K >= 1");
  // Integer case analysis on K/m; exact, no floating point.
  if (ring_size < 2 * m) return {1};
  if (ring_size == 2 * m) return {1, 2};
  const std::uint32_t quotient = ring_size / m;
  if (ring_size % m == 0) return {quotient - 1, quotient};
  return {quotient};
}

UnassailabilityMargin unassailability_margin(std::uint32_t n,
                                             std::uint32_t ring_size,
                                             std::uint32_t pool_size,
                                             double min_margin) {
  UnassailabilityMargin out;
  out.margin = static_cast<double>(pool_size) /
               (static_cast<double>(ring_size) * static_cast<double>(n));
  out.pass = out.margin >= min_margin;
  return out;
}

SplitAttackResult split_attack(const Placement& placement, double radius,
                               double ell) {
  if (placement.region == RegionKind::FullVisibility)
    throw std::invalid_argument("split_attack: needs a disk-model placement");
  if (!(radius > 0.0))
    throw std::invalid_argument("split_attack: radius must be positive");
  if (!(ell > 0.0) || !(ell < 1.0 - 2.0 * radius))
    throw std::invalid_argument("split_attack: need 0 < ell < 1 - 2r");

  const bool torus = placement.region == RegionKind::UnitTorus;
  SplitAttackResult result;
  result.strategy = BandCapture{ell, ell + 2.0 * radius};

  // On the torus a second band at the wrap seam ([1-r, 1) and [0, r)) is
  // captured as well; otherwise the two chunks reconnect around the back.
  const auto in_seam = [&](double x) {
    return torus && (x < radius || x >= 1.0 - radius);
  };
  for (std::uint32_t v = 0; v < placement.node_count(); ++v) {
    const double x = placement.points[v].x;
    if ((x >= ell && x <= ell + 2.0 * radius) || in_seam(x))
      result.captured.push_back(v);
    else if (x < ell)
      result.chunk_low.push_back(v);
    else
      result.chunk_high.push_back(v);
  }

  for (const auto a : result.chunk_low)
    for (const auto b : result.chunk_high)
      if (distance(placement.points[a], placement.points[b],
                   placement.region) <= radius)
        ++result.cross_edges;
  return result;
}

ResilientCore resilient_core(const KeyAssignment& keys,
                             const CaptureState& state, std::uint32_t overlap,
                             double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("resilient_core: need 0 < alpha < 1");
  const std::uint32_t n = keys.node_count();
  const auto required = static_cast<std::uint32_t>(
      std::ceil((1.0 - alpha) * static_cast<double>(keys.ring_size)));

  // Core membership: non-captured nodes with enough surviving keys. The
  // core graph then runs the q-composite rule over surviving keys only.
  KeyAssignment surviving;
  surviving.pool_size = keys.pool_size;
  std::vector<std::uint32_t> filtered;
  ResilientCore core;
  std::vector<std::vector<std::uint32_t>> rings;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (state.is_captured(v)) continue;
    filtered.clear();
    for (const auto key : keys.ring(v))
      if (!state.key_known(key)) filtered.push_back(key);
    if (filtered.size() >= required) {
      core.core_nodes.push_back(v);
      rings.push_back(filtered);
    }
  }

  // Variable-length rings: reuse the gather kernel by padding is wasteful,
  // so build the key->holders index directly here.
  const auto core_n = static_cast<std::uint32_t>(core.core_nodes.size());
  std::vector<std::uint64_t> slots;
  for (std::uint32_t idx = 0; idx < core_n; ++idx)
    for (const auto key : rings[idx])
      slots.push_back((static_cast<std::uint64_t>(key) << 32) | idx);
  std::sort(slots.begin(), slots.end());

  std::vector<std::uint64_t> pair_codes;
  std::size_t run_start = 0;
  for (std::size_t i = 1; i <= slots.size(); ++i) {
    if (i == slots.size() || (slots[i] >> 32) != (slots[run_start] >> 32)) {
      for (std::size_t a = run_start; a < i; ++a)
        for (std::size_t b = a + 1; b < i; ++b)
          pair_codes.push_back((slots[a] << 32) |
                               (slots[b] & 0xFFFFFFFFull));
      run_start = i;
    }
  }
  std::sort(pair_codes.begin(), pair_codes.end());
  std::vector<std::uint64_t> edges;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= pair_codes.size(); ++i) {
    if (i == pair_codes.size() || pair_codes[i] != pair_codes[start]) {
      if (i - start >= overlap) edges.push_back(pair_codes[start]);
      start = i;
    }
  }
  core.core_graph =
      AdjacencyGraph::from_edge_codes(core_n, std::move(edges));
  core.connected = core_n > 0 && components(core.core_graph).connected;
  return core;
}

}  // namespace keymesh
