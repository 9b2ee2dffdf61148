#include "keymesh/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "keymesh/edge_prob.hpp"
#include "keymesh/keys.hpp"
#include "keymesh/runner.hpp"

namespace keymesh {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::uint32_t n) : parent_(n), size_(n, 1) {
    for (std::uint32_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];  // path halving
      v = parent_[v];
    }
    return v;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

  std::uint32_t component_size(std::uint32_t root) const { return size_[root]; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace

ConnectivityReport components(const AdjacencyGraph& graph) {
  const std::uint32_t n = graph.node_count();
  if (n == 0)
    throw std::invalid_argument("components: empty graph is rejected");
  UnionFind uf(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (const auto j : graph.neighbors(i))
      if (i < j) uf.unite(i, j);

  ConnectivityReport report;
  for (std::uint32_t i = 0; i < n; ++i)
    if (uf.find(i) == i)
      report.component_sizes.push_back(uf.component_size(i));
  std::sort(report.component_sizes.begin(), report.component_sizes.end(),
            std::greater<>());
  report.connected = report.component_sizes.size() == 1;
  report.isolated_count = static_cast<std::uint32_t>(
      std::count(report.component_sizes.begin(), report.component_sizes.end(),
                 1u));
  return report;
}

double threshold_c_square(std::uint32_t n, std::uint32_t ring_size,
                          std::uint32_t pool_size) {
  if (n < 2) throw std::invalid_argument("threshold_c_square: need n >= 2");
  const double log_n = std::log(static_cast<double>(n));
  const double log_ratio =
      std::log(static_cast<double>(pool_size) /
               (static_cast<double>(ring_size) * ring_size));
  return std::max(1.0 + log_ratio / log_n, 4.0 * log_ratio / log_n);
}

double threshold_c_square_unreliable(std::uint32_t n, std::uint32_t ring_size,
                                     std::uint32_t pool_size, double t,
                                     std::uint32_t overlap) {
  if (n < 2)
    throw std::invalid_argument("threshold_c_square_unreliable: need n >= 2");
  if (!(t > 0.0) || t > 1.0)
    throw std::invalid_argument("threshold_c_square_unreliable: need 0 < t <= 1");
  const double log_n = std::log(static_cast<double>(n));
  const double term = static_cast<double>(overlap) *
                          std::log(static_cast<double>(pool_size) /
                                   (static_cast<double>(ring_size) * ring_size)) +
                      std::log(1.0 / t);
  return std::max(1.0 + term / log_n, 4.0 * term / log_n);
}

ConnectivityMargin achieved_c(const SettingSpec& setting,
                              const SchemeParams& scheme, const GeoParams& geo,
                              const ChannelParams& channel) {
  setting.validate();
  scheme.validate();
  const bool disk = setting.visibility != RegionKind::FullVisibility;
  if (disk && geo.region != setting.visibility)
    throw std::invalid_argument("achieved_c: setting/geometry mismatch");
  if (disk) geo.validate();
  if (setting.unreliable) channel.validate();

  ConnectivityMargin margin;
  margin.proxy = key_setup_proxy(scheme);
  if (disk)
    margin.proxy *= std::numbers::pi * geo.radius * geo.radius;
  if (setting.unreliable) margin.proxy *= channel.link_active_prob;

  const double log_n = std::log(static_cast<double>(scheme.node_count));
  if (scheme.node_count < 2)
    throw std::invalid_argument("achieved_c: need n >= 2");
  margin.achieved = margin.proxy * static_cast<double>(scheme.node_count) / log_n;

  if (setting.visibility == RegionKind::UnitSquare) {
    margin.threshold =
        setting.unreliable
            ? threshold_c_square_unreliable(scheme.node_count,
                                            scheme.ring_size, scheme.pool_size,
                                            channel.link_active_prob,
                                            scheme.overlap)
            : threshold_c_square(scheme.node_count, scheme.ring_size,
                                 scheme.pool_size);
  } else {
    margin.threshold = 1.0;
  }
  margin.satisfied = margin.achieved > margin.threshold;
  return margin;
}

ScalingAdvisory scaling_advisory(const SchemeParams& scheme,
                                 const GeoParams& geo,
                                 const ScalingThresholds& thresholds) {
  ScalingAdvisory adv;
  const double n = scheme.node_count;
  const double ring = scheme.ring_size;
  const double pool = scheme.pool_size;
  adv.ring_over_log_n = ring / std::log(n);
  adv.ring_sq_over_pool = ring * ring / pool;
  adv.ring_n_over_pool = ring * n / pool;
  adv.ring_growth_ok = adv.ring_over_log_n >= thresholds.min_ring_over_log_n;
  adv.ring_sq_ok = adv.ring_sq_over_pool <= thresholds.max_ring_sq_over_pool;
  adv.ring_n_ok = adv.ring_n_over_pool <= thresholds.max_ring_n_over_pool;
  if (geo.region == RegionKind::FullVisibility) {
    adv.radius = std::numeric_limits<double>::quiet_NaN();
    adv.radius_ok = true;  // no radius to scale
  } else {
    adv.radius = geo.radius;
    adv.radius_ok = geo.radius <= thresholds.max_radius;
  }
  adv.all_ok =
      adv.ring_growth_ok && adv.ring_sq_ok && adv.ring_n_ok && adv.radius_ok;
  return adv;
}

double expected_isolated_torus(std::uint32_t n, double keep_prob,
                               double radius) {
  if (!(radius > 0.0) || radius > 0.5)
    throw std::domain_error("expected_isolated_torus: need 0 < r <= 1/2");
  if (keep_prob < 0.0 || keep_prob > 1.0)
    throw std::invalid_argument("expected_isolated_torus: need 0 <= p <= 1");
  const double exponent =
      std::numbers::pi * radius * radius * keep_prob * static_cast<double>(n);
  return static_cast<double>(n) * std::exp(-exponent);
}

ConnectivityEstimate estimate_connectivity(const NetworkModel& model,
                                           std::uint32_t trials,
                                           std::uint64_t master_seed,
                                           std::uint32_t capture_m,
                                           std::uint64_t stream_offset) {
  model.validate();
  if (trials < 1)
    throw std::invalid_argument("estimate_connectivity: trials must be >= 1");
  if (capture_m >= model.scheme.node_count)
    throw std::invalid_argument("estimate_connectivity: capture_m >= n");

  struct TrialOutcome {
    char connected = 0;
    std::uint32_t isolated = 0;
    std::uint32_t component_count = 0;
  };

  const auto outcomes = run_trials<TrialOutcome>(trials, [&](std::uint64_t t) {
    const RngStream trial_stream(master_seed, stream_offset + t);
    auto sample = sample_network(model, trial_stream);
    AdjacencyGraph* graph = &sample.graph;
    AdjacencyGraph survivors_graph;
    if (capture_m > 0) {
      auto capture_rng = trial_stream.split(lanes::kCapture);
      const auto captured = sample_subset(model.scheme.node_count, capture_m,
                                          capture_rng);
      // Relabel the surviving nodes compactly and keep internal edges.
      std::vector<std::uint32_t> relabel(model.scheme.node_count,
                                         0xFFFFFFFFu);
      std::uint32_t kept = 0;
      std::size_t cursor = 0;
      for (std::uint32_t v = 0; v < model.scheme.node_count; ++v) {
        if (cursor < captured.size() && captured[cursor] == v) {
          ++cursor;
          continue;
        }
        relabel[v] = kept++;
      }
      std::vector<std::uint64_t> kept_edges;
      for (const auto code : sample.graph.edge_codes()) {
        const auto i = relabel[static_cast<std::uint32_t>(code >> 32)];
        const auto j = relabel[static_cast<std::uint32_t>(code & 0xFFFFFFFFu)];
        if (i != 0xFFFFFFFFu && j != 0xFFFFFFFFu)
          kept_edges.push_back(edge_code(i, j));
      }
      survivors_graph =
          AdjacencyGraph::from_edge_codes(kept, std::move(kept_edges));
      graph = &survivors_graph;
    }
    const auto report = components(*graph);
    TrialOutcome out;
    out.connected = report.connected ? 1 : 0;
    out.isolated = report.isolated_count;
    out.component_count =
        static_cast<std::uint32_t>(report.component_sizes.size());
    return out;
  });

  std::uint64_t connected = 0;
  double isolated_sum = 0.0, component_sum = 0.0;
  for (const auto& o : outcomes) {
    connected += o.connected;
    isolated_sum += o.isolated;
    component_sum += o.component_count;
  }
  ConnectivityEstimate est;
  est.interval = wilson_interval(connected, trials);
  est.trials = trials;
  est.isolated_mean = isolated_sum / trials;
  est.component_count_mean = component_sum / trials;
  return est;
}

}  // namespace keymesh
