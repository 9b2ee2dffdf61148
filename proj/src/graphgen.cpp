#include "keymesh/graphgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "keymesh/edge_prob.hpp"

namespace keymesh {

namespace {

std::uint32_t merge_count(std::span<const std::uint32_t> a,
                          std::span<const std::uint32_t> b,
                          std::uint32_t stop_at) {
  std::uint32_t count = 0;
  std::size_t x = 0, y = 0;
  while (x < a.size() && y < b.size()) {
    if (a[x] < b[y]) {
      ++x;
    } else if (a[x] > b[y]) {
      ++y;
    } else {
      if (++count >= stop_at) return count;
      ++x;
      ++y;
    }
  }
  return count;
}

// Emits every unordered pair sharing >= overlap keys, via a key->holders
// index: expected Sum_k C(holders_k, 2) work, far below n^2 when K^2 << P.
template <class Fn>
void key_pairs_by_gather(const KeyAssignment& keys, std::uint32_t overlap,
                         Fn&& fn) {
  const std::uint32_t n = keys.node_count();
  std::vector<std::uint64_t> slots;
  slots.reserve(keys.keys.size());
  for (std::uint32_t node = 0; node < n; ++node)
    for (const auto key : keys.ring(node))
      slots.push_back((static_cast<std::uint64_t>(key) << 32) | node);
  std::sort(slots.begin(), slots.end());

  std::vector<std::uint64_t> pair_codes;
  std::size_t run_start = 0;
  for (std::size_t idx = 1; idx <= slots.size(); ++idx) {
    if (idx == slots.size() || (slots[idx] >> 32) != (slots[run_start] >> 32)) {
      for (std::size_t a = run_start; a < idx; ++a)
        for (std::size_t b = a + 1; b < idx; ++b)
          pair_codes.push_back(
              (slots[a] << 32) | (slots[b] & 0xFFFFFFFFull));
      run_start = idx;
    }
  }
  std::sort(pair_codes.begin(), pair_codes.end());

  std::size_t start = 0;
  for (std::size_t idx = 1; idx <= pair_codes.size(); ++idx) {
    if (idx == pair_codes.size() || pair_codes[idx] != pair_codes[start]) {
      if (idx - start >= overlap) {
        const auto code = pair_codes[start];
        fn(static_cast<std::uint32_t>(code >> 32),
           static_cast<std::uint32_t>(code & 0xFFFFFFFFu));
      }
      start = idx;
    }
  }
}

template <class Fn>
void key_pairs_by_merge(const KeyAssignment& keys, std::uint32_t overlap,
                        Fn&& fn) {
  const std::uint32_t n = keys.node_count();
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (merge_count(keys.ring(i), keys.ring(j), overlap) >= overlap)
        fn(i, j);
}

template <class Fn>
void for_each_key_pair(const KeyAssignment& keys, std::uint32_t overlap,
                       Fn&& fn) {
  // The gather route wins when rings are sparse in the pool; dense rings
  // (or tiny graphs) do better with plain pairwise merges.
  const bool gather = keys.node_count() > 64 &&
                      4ull * keys.ring_size < keys.pool_size;
  if (gather)
    key_pairs_by_gather(keys, overlap, std::forward<Fn>(fn));
  else
    key_pairs_by_merge(keys, overlap, std::forward<Fn>(fn));
}

// Emits every unordered pair within `radius`, each exactly once.
template <class Fn>
void for_each_geo_pair(const Placement& placement, double radius, Fn&& fn) {
  const std::uint32_t n = placement.node_count();
  const bool torus = placement.region == RegionKind::UnitTorus;
  const auto cells_per_axis = static_cast<std::uint32_t>(
      std::floor(1.0 / std::max(radius, 1e-9)));

  if (n <= 32 || cells_per_axis < 3) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        if (distance(placement.points[i], placement.points[j],
                     placement.region) <= radius)
          fn(i, j);
    return;
  }

  const std::uint32_t m = cells_per_axis;
  const auto cell_of = [&](const Point& p) {
    const auto cx = std::min(static_cast<std::uint32_t>(p.x * m), m - 1);
    const auto cy = std::min(static_cast<std::uint32_t>(p.y * m), m - 1);
    return cy * m + cx;
  };

  // Counting sort of node ids by cell keeps within-cell order ascending.
  std::vector<std::uint32_t> cell_start(static_cast<std::size_t>(m) * m + 1, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    ++cell_start[cell_of(placement.points[i]) + 1];
  for (std::size_t c = 1; c < cell_start.size(); ++c)
    cell_start[c] += cell_start[c - 1];
  std::vector<std::uint32_t> nodes(n);
  {
    std::vector<std::uint32_t> cursor(cell_start.begin(), cell_start.end() - 1);
    for (std::uint32_t i = 0; i < n; ++i)
      nodes[cursor[cell_of(placement.points[i])]++] = i;
  }

  const auto check_pair = [&](std::uint32_t a, std::uint32_t b) {
    if (distance(placement.points[a], placement.points[b],
                 placement.region) <= radius) {
      if (a < b)
        fn(a, b);
      else
        fn(b, a);
    }
  };

  // Half neighborhood so each cell pair is visited once.
  constexpr int kDx[4] = {1, 1, 0, -1};
  constexpr int kDy[4] = {0, 1, 1, 1};
  for (std::uint32_t cy = 0; cy < m; ++cy) {
    for (std::uint32_t cx = 0; cx < m; ++cx) {
      const auto c = cy * m + cx;
      const auto begin = cell_start[c], end = cell_start[c + 1];
      for (auto a = begin; a < end; ++a)
        for (auto b = a + 1; b < end; ++b)
          check_pair(nodes[a], nodes[b]);
      for (int d = 0; d < 4; ++d) {
        const int nx_raw = static_cast<int>(cx) + kDx[d];
        const int ny_raw = static_cast<int>(cy) + kDy[d];
        std::uint32_t nx, ny;
        if (torus) {
          nx = static_cast<std::uint32_t>((nx_raw + static_cast<int>(m)) % static_cast<int>(m));
          ny = static_cast<std::uint32_t>((ny_raw + static_cast<int>(m)) % static_cast<int>(m));
        } else {
          if (nx_raw < 0 || ny_raw < 0 || nx_raw >= static_cast<int>(m) ||
              ny_raw >= static_cast<int>(m))
            continue;
          nx = static_cast<std::uint32_t>(nx_raw);
          ny = static_cast<std::uint32_t>(ny_raw);
        }
        const auto c2 = ny * m + nx;
        const auto begin2 = cell_start[c2], end2 = cell_start[c2 + 1];
        for (auto a = begin; a < end; ++a)
          for (auto b = begin2; b < end2; ++b)
            check_pair(nodes[a], nodes[b]);
      }
    }
  }
}

// Linear pair index (i < j, lexicographic) -> (i, j).
std::pair<std::uint32_t, std::uint32_t> decode_pair(std::uint32_t n,
                                                    std::uint64_t idx) {
  // Invert idx = i*n - i*(i+1)/2 + (j - i - 1); start from the float guess
  // and correct by +-1 steps.
  const double fn = static_cast<double>(n);
  auto i = static_cast<std::int64_t>(
      std::floor(fn - 0.5 - std::sqrt((fn - 0.5) * (fn - 0.5) -
                                      2.0 * static_cast<double>(idx))));
  const auto row_start = [&](std::int64_t r) {
    return static_cast<std::uint64_t>(r) * n - static_cast<std::uint64_t>(r) * (r + 1) / 2;
  };
  while (i > 0 && row_start(i) > idx) --i;
  while (row_start(i + 1) <= idx) ++i;
  const auto j = static_cast<std::uint32_t>(idx - row_start(i)) +
                 static_cast<std::uint32_t>(i) + 1;
  return {static_cast<std::uint32_t>(i), j};
}

}  // namespace

std::uint32_t shared_key_count(const KeyAssignment& keys, std::uint32_t i,
                               std::uint32_t j) {
  if (i == j) throw std::invalid_argument("shared_key_count: i == j");
  return merge_count(keys.ring(i), keys.ring(j), keys.ring_size + 1);
}

bool shares_at_least(const KeyAssignment& keys, std::uint32_t i,
                     std::uint32_t j, std::uint32_t overlap) {
  return merge_count(keys.ring(i), keys.ring(j), overlap) >= overlap;
}

AdjacencyGraph key_graph(const KeyAssignment& keys, std::uint32_t overlap) {
  if (overlap < 1) throw std::invalid_argument("key_graph: overlap must be >= 1");
  std::vector<std::uint64_t> edges;
  for_each_key_pair(keys, overlap, [&](std::uint32_t i, std::uint32_t j) {
    edges.push_back(edge_code(i, j));
  });
  return AdjacencyGraph::from_edge_codes(keys.node_count(), std::move(edges));
}

AdjacencyGraph geometric_graph(const Placement& placement, double radius) {
  if (!(radius > 0.0))
    throw std::invalid_argument("geometric_graph: radius must be positive");
  std::vector<std::uint64_t> edges;
  for_each_geo_pair(placement, radius, [&](std::uint32_t i, std::uint32_t j) {
    edges.push_back(edge_code(i, j));
  });
  return AdjacencyGraph::from_edge_codes(placement.node_count(),
                                         std::move(edges));
}

AdjacencyGraph geometric_graph_naive(const Placement& placement,
                                     double radius) {
  const std::uint32_t n = placement.node_count();
  std::vector<std::uint64_t> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (distance(placement.points[i], placement.points[j],
                   placement.region) <= radius)
        edges.push_back(edge_code(i, j));
  return AdjacencyGraph::from_edge_codes(n, std::move(edges));
}

AdjacencyGraph er_graph(std::uint32_t n, double p, RngStream rng) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("er_graph: need 0 <= p <= 1");
  std::vector<std::uint64_t> edges;
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (n >= 2 && p >= 1.0) {
    edges.reserve(total);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        edges.push_back(edge_code(i, j));
  } else if (n >= 2 && p > 0.0) {
    // Skip-sampling: gaps between successive edges are geometric(p).
    const double log_q = std::log1p(-p);
    std::uint64_t consumed = 0;
    while (true) {
      const double u = rng.next_unit();
      const double skip = std::floor(std::log1p(-u) / log_q);
      if (skip >= static_cast<double>(total - consumed)) break;
      consumed += static_cast<std::uint64_t>(skip) + 1;
      const auto [i, j] = decode_pair(n, consumed - 1);
      edges.push_back(edge_code(i, j));
      if (consumed >= total) break;
    }
  }
  return AdjacencyGraph::from_edge_codes(n, std::move(edges));
}

AdjacencyGraph compose_topology(const KeyAssignment& keys,
                                std::uint32_t overlap,
                                const Placement* placement, double radius,
                                double link_active_prob,
                                std::uint64_t er_key) {
  const std::uint32_t n = keys.node_count();
  std::vector<std::uint64_t> edges;
  const auto accept = [&](std::uint32_t i, std::uint32_t j) {
    const auto code = edge_code(i, j);
    if (link_active_prob < 1.0 && !keyed_coin(er_key, code, link_active_prob))
      return;
    edges.push_back(code);
  };

  if (placement == nullptr) {
    for_each_key_pair(keys, overlap, accept);
  } else {
    if (placement->node_count() != n)
      throw std::invalid_argument("compose_topology: placement size mismatch");
    // Run the sparser filter first. Rough per-pair costs: the geometric
    // pass scans min(9r^2,1) candidates plus a ring merge per in-radius
    // pair; the key pass costs ~4 index ops per co-held key pair plus a
    // distance check per key-graph edge.
    SchemeParams scheme{std::max(n, 1u), keys.ring_size, keys.pool_size,
                        overlap};
    const double mu =
        std::min(std::numbers::pi * radius * radius, 1.0);
    const double pq = key_setup_probability(scheme);
    const double kk_over_p = static_cast<double>(keys.ring_size) *
                             keys.ring_size / keys.pool_size;
    const double cost_geo_first =
        std::min(9.0 * radius * radius, 1.0) +
        mu * 2.0 * static_cast<double>(keys.ring_size);
    const double cost_keys_first = 4.0 * kk_over_p + pq;
    const bool keys_first = keys.node_count() > 64 &&
                            4ull * keys.ring_size < keys.pool_size &&
                            cost_keys_first < cost_geo_first;
    if (keys_first) {
      for_each_key_pair(keys, overlap, [&](std::uint32_t i, std::uint32_t j) {
        if (distance(placement->points[i], placement->points[j],
                     placement->region) <= radius)
          accept(i, j);
      });
    } else {
      for_each_geo_pair(*placement, radius,
                        [&](std::uint32_t i, std::uint32_t j) {
                          if (shares_at_least(keys, i, j, overlap))
                            accept(i, j);
                        });
    }
  }
  return AdjacencyGraph::from_edge_codes(n, std::move(edges));
}

NetworkSample sample_network(const NetworkModel& model,
                             const RngStream& trial_stream) {
  model.validate();
  NetworkSample sample;
  sample.keys = assign_keys(model.scheme, trial_stream.split(lanes::kKeys));
  const bool disk = model.geo.region != RegionKind::FullVisibility;
  if (disk)
    sample.placement = place_nodes(model.scheme.node_count, model.geo,
                                   trial_stream.split(lanes::kPlacement));
  sample.graph = compose_topology(
      sample.keys, model.scheme.overlap, disk ? &sample.placement : nullptr,
      model.geo.radius, model.channel.link_active_prob,
      trial_stream.split(lanes::kLinkCoins).key());
  return sample;
}

AdjacencyGraph sample_gpr_graph(std::uint32_t n, double keep_prob,
                                double radius, RegionKind region,
                                const RngStream& trial_stream) {
  if (keep_prob < 0.0 || keep_prob > 1.0)
    throw std::invalid_argument("sample_gpr_graph: need 0 <= p <= 1");
  const GeoParams geo{region, radius};
  geo.validate();
  const auto placement =
      place_nodes(n, geo, trial_stream.split(lanes::kPlacement));
  const auto er_key = trial_stream.split(lanes::kLinkCoins).key();
  std::vector<std::uint64_t> edges;
  for_each_geo_pair(placement, radius, [&](std::uint32_t i, std::uint32_t j) {
    const auto code = edge_code(i, j);
    if (keep_prob >= 1.0 || keyed_coin(er_key, code, keep_prob))
      edges.push_back(code);
  });
  return AdjacencyGraph::from_edge_codes(n, std::move(edges));
}

}  // namespace keymesh
