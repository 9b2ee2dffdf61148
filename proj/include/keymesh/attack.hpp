#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "keymesh/geometry.hpp"
#include "keymesh/graph.hpp"
#include "keymesh/graphgen.hpp"
#include "keymesh/keys.hpp"
#include "keymesh/rng.hpp"

namespace keymesh {

/// Node-capture strategies: a uniform random m-subset, an explicit node
/// set, or every node whose x-coordinate falls in [x_low, x_high] (the
/// band capture behind the splitting attack).
struct RandomCapture {
  std::uint32_t count = 0;
};
struct ChosenCapture {
  std::vector<std::uint32_t> nodes;
};
struct BandCapture {
  double x_low = 0.0;
  double x_high = 0.0;
};
using CaptureStrategy = std::variant<RandomCapture, ChosenCapture, BandCapture>;

/// The adversary's haul: captured nodes plus every key id found in their
/// rings. compromised_key_count is the paper's tau.
struct CaptureState {
  std::vector<std::uint32_t> captured;      // sorted node ids
  std::vector<char> captured_mask;          // size n
  std::vector<char> compromised_keys;       // size P, 1 = known to adversary
  std::uint32_t compromised_key_count = 0;  // tau

  bool is_captured(std::uint32_t node) const {
    return captured_mask[node] != 0;
  }
  bool key_known(std::uint32_t key) const {
    return compromised_keys[key] != 0;
  }
};

/// Executes a capture strategy. Band capture needs a placement; the others
/// ignore it. Random capture draws from `rng`.
CaptureState capture(const CaptureStrategy& strategy,
                     const KeyAssignment& keys, const Placement* placement,
                     RngStream rng);

/// True iff every key shared by the two (non-captured) endpoints is known
/// to the adversary, i.e. the secure link is compromised.
bool link_compromised(std::uint32_t i, std::uint32_t j,
                      const KeyAssignment& keys, const CaptureState& state);

/// Link-compromise census over a composed topology: counts links whose
/// endpoints are both non-captured, and how many of those the adversary
/// can read.
struct ResilienceReport {
  std::uint64_t secure_links = 0;
  std::uint64_t compromised_links = 0;
  std::uint32_t tau = 0;
  std::optional<double> compromised_fraction;  // absent when no links
};

ResilienceReport measure_resilience(const AdjacencyGraph& graph,
                                    const KeyAssignment& keys,
                                    const CaptureState& state);

/// Probability that a secure link between two non-captured nodes is
/// compromised once the adversary holds tau keys:
///   sum_{u=q}^{K} C(tau,u)/C(P,u) * rho_u / p_q.
double analytic_p_compromised_tau(const SchemeParams& scheme,
                                  std::uint64_t tau);

/// Worst-case bound (mK/(P-K))^q obtained by setting tau = mK. Reported
/// unclamped, so it can exceed 1.
double p_comp_upper_bound(const SchemeParams& scheme, std::uint32_t m);

/// Asymptotic fraction (mK/P)^q compromised under a random capture of m.
double p_comp_asymptotic_random(const SchemeParams& scheme, std::uint32_t m);

/// f(q) = q! (m/K)^q, the asymptotic ratio p_compromised / p_q; its
/// minimizer over q is where the scheme best resists random capture.
double f_of_q(std::uint32_t overlap, std::uint32_t m, std::uint32_t ring_size);

/// Minimizer set of f(q): {1} if K/m < 2; {1,2} if K/m = 2; {floor(K/m)}
/// if K/m > 2 and non-integral; {K/m - 1, K/m} if K/m is an integer > 2.
std::vector<std::uint32_t> optimal_q(std::uint32_t m, std::uint32_t ring_size);

/// Finite-n surrogate for the unassailability condition P/K = Omega(n):
/// the ratio (P/K)/n, flagged against a configurable constant.
struct UnassailabilityMargin {
  double margin = 0.0;
  bool pass = false;
};
UnassailabilityMargin unassailability_margin(std::uint32_t n,
                                             std::uint32_t ring_size,
                                             std::uint32_t pool_size,
                                             double min_margin = 1.0);

/// The splitting attack: capture every node in a vertical band of width 2r
/// starting at x = ell (plus the wrap seam band on the torus, so the two
/// remaining chunks are genuinely separated). Returns the chunk node sets
/// left and right of the band and the number of geometric edges crossing
/// between them, which the construction forces to zero.
struct SplitAttackResult {
  CaptureStrategy strategy;
  std::vector<std::uint32_t> captured;  // nodes inside the band(s)
  std::vector<std::uint32_t> chunk_low;   // x < ell (torus: x in [r, ell))
  std::vector<std::uint32_t> chunk_high;  // x > ell + 2r (torus: <= 1 - r)
  std::uint64_t cross_edges = 0;
};

SplitAttackResult split_attack(const Placement& placement, double radius,
                               double ell);

/// The resilient-core construction: non-captured nodes that keep at least
/// ceil((1-alpha)K) uncompromised keys, wired by edges that share >= q
/// uncompromised keys. Returns the core membership and whether the core
/// graph is connected.
struct ResilientCore {
  std::vector<std::uint32_t> core_nodes;  // original ids, sorted
  AdjacencyGraph core_graph;              // indexed by position in core_nodes
  bool connected = false;
};

ResilientCore resilient_core(const KeyAssignment& keys,
                             const CaptureState& state, std::uint32_t overlap,
                             double alpha);

}  // namespace keymesh
