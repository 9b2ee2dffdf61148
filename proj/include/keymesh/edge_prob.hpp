#pragma once

#include <cstdint>
#include <vector>

#include "keymesh/params.hpp"

namespace keymesh {

/// rho_u for u = 0..K: probability that two independent uniform K-subsets
/// of a P-pool intersect in exactly u keys,
///   rho_u = C(K,u) * C(P-K, K-u) / C(P,K).
/// Entries outside the feasible range [max(0, 2K-P), K] are exact zeros.
std::vector<double> ring_overlap_pmf(std::uint32_t ring_size,
                                     std::uint32_t pool_size);

/// Single rho_u. Throws if u > K.
double prob_ring_overlap(const SchemeParams& scheme, std::uint32_t shared);

/// Key-setup probability p_q = sum_{u=q}^{K} rho_u: the chance two rings
/// share at least q keys.
double key_setup_probability(const SchemeParams& scheme);

/// First-order approximation p_q ~ (1/q!) * K^(2q) / P^q, valid when
/// K grows and K = o(sqrt(P)). Clamped to [0, 1] for reporting.
double key_setup_probability_asymptotic(const SchemeParams& scheme);

/// Same quantity without the clamp (threshold algebra wants the raw value).
double key_setup_proxy(const SchemeParams& scheme);

/// Probability that two uniform points on the region lie within `radius`.
/// Torus: exact value (lower == upper == point). Square: the exact value is
/// bracketed by [lower, upper] = [(1-2r)^2 * pi r^2, pi r^2]; `point` holds
/// the asymptotic stand-in pi r^2.
struct RadiusLinkProbability {
  double lower = 0.0;
  double upper = 0.0;
  double point = 0.0;
};
RadiusLinkProbability radius_link_probability(const GeoParams& geo);

/// Largest pool size P with p_q(K, P, q) >= target. The key-setup
/// probability is non-increasing in P, so this is a monotone bisection.
/// Throws if even P = K falls short (unattainable target).
std::uint32_t pool_size_for_key_setup(std::uint32_t ring_size,
                                      std::uint32_t overlap, double target);

/// Independent oracle for rho_u: enumerates all C(P,K) rings against a
/// fixed ring and counts overlaps. Guarded to C(P,K) <= 100000.
double prob_ring_overlap_enumerated(const SchemeParams& scheme,
                                    std::uint32_t shared);

/// C(n,k) as a double via a stable product; inf if it overflows.
double binomial(std::uint64_t n, std::uint64_t k);

/// Ratio C(a,u)/C(b,u) for a <= b, computed as a product of u factors.
double binomial_ratio(std::uint64_t a, std::uint64_t b, std::uint32_t u);

}  // namespace keymesh
