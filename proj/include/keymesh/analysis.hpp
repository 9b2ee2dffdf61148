#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "keymesh/graph.hpp"
#include "keymesh/graphgen.hpp"
#include "keymesh/params.hpp"
#include "keymesh/stats.hpp"

namespace keymesh {

/// Exact connected-component summary of a graph.
struct ConnectivityReport {
  bool connected = false;
  std::vector<std::uint32_t> component_sizes;  // descending, sums to n
  std::uint32_t isolated_count = 0;            // number of size-1 components
};

ConnectivityReport components(const AdjacencyGraph& graph);

/// Square-region threshold constant c* = max{1 + ln(P/K^2)/ln n,
/// 4 ln(P/K^2)/ln n}. Total for any P, K; requires n >= 2.
double threshold_c_square(std::uint32_t n, std::uint32_t ring_size,
                          std::uint32_t pool_size);

/// Unreliable-link square threshold c# = max{1 + (q ln(P/K^2) + ln(1/t))/ln n,
/// 4 (q ln(P/K^2) + ln(1/t))/ln n}. Reduces to c* at t = 1, q = 1.
double threshold_c_square_unreliable(std::uint32_t n, std::uint32_t ring_size,
                                     std::uint32_t pool_size, double t,
                                     std::uint32_t overlap);

/// Where a parameterization sits relative to its connectivity condition.
/// `proxy` is the asymptotic edge probability (1/q!)K^(2q)/P^q, times
/// pi r^2 under the disk model, times t under unreliable links; `achieved`
/// is the c solving proxy = c ln n / n, and `threshold` is the constant the
/// applicable theorem requires c to exceed (1, c*, or c#).
struct ConnectivityMargin {
  double proxy = 0.0;
  double achieved = 0.0;
  double threshold = 1.0;
  bool satisfied = false;
};

ConnectivityMargin achieved_c(const SettingSpec& setting,
                              const SchemeParams& scheme, const GeoParams& geo,
                              const ChannelParams& channel);

/// Finite-n surrogates for the paper's parameter-scaling assumptions
/// (K = omega(ln n), K = o(min{sqrt P, P/n}), r = o(1)). Advisory only:
/// the assumptions are asymptotic and not decidable at a single n.
struct ScalingThresholds {
  double min_ring_over_log_n = 3.0;
  double max_ring_sq_over_pool = 0.2;
  double max_ring_n_over_pool = 0.2;
  double max_radius = 0.3;
};

struct ScalingAdvisory {
  double ring_over_log_n = 0.0;
  double ring_sq_over_pool = 0.0;
  double ring_n_over_pool = 0.0;
  double radius = 0.0;  // NaN under full visibility
  bool ring_growth_ok = false;
  bool ring_sq_ok = false;
  bool ring_n_ok = false;
  bool radius_ok = false;
  bool all_ok = false;
};

ScalingAdvisory scaling_advisory(const SchemeParams& scheme,
                                 const GeoParams& geo,
                                 const ScalingThresholds& thresholds = {});

/// Asymptotic expected isolated-node count n * exp(-pi r^2 p n) for the
/// thinned geometric graph G(n, p, r, torus).
double expected_isolated_torus(std::uint32_t n, double keep_prob,
                               double radius);

struct ConnectivityEstimate {
  WilsonInterval interval;
  std::uint32_t trials = 0;
  double isolated_mean = 0.0;
  double component_count_mean = 0.0;
};

/// Monte Carlo connectivity probability of the composed network, with a
/// 95% Wilson interval. With capture_m > 0, each trial removes a uniform
/// random capture_m-subset of nodes first and checks connectivity of the
/// remaining subgraph. Deterministic per master_seed and trial count.
ConnectivityEstimate estimate_connectivity(const NetworkModel& model,
                                           std::uint32_t trials,
                                           std::uint64_t master_seed,
                                           std::uint32_t capture_m = 0,
                                           std::uint64_t stream_offset = 0);

}  // namespace keymesh
