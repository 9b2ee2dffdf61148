#include "keymesh/edge_prob.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace keymesh {

namespace {

// Log C(n,k) via lgamma; only used to anchor the pmf recurrence in the
// degenerate 2K > P corner, where the arguments stay small.
double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double value = 1.0;
  for (std::uint64_t i = 0; i < k; ++i) {
    value *= static_cast<double>(n - i);
    value /= static_cast<double>(i + 1);
    if (!std::isfinite(value)) return std::numeric_limits<double>::infinity();
  }
  return value;
}

double binomial_ratio(std::uint64_t a, std::uint64_t b, std::uint32_t u) {
  if (a > b) throw std::invalid_argument("binomial_ratio: need a <= b");
  if (u > a) return 0.0;
  double value = 1.0;
  for (std::uint32_t i = 0; i < u; ++i)
    value *= static_cast<double>(a - i) / static_cast<double>(b - i);
  return value;
}

std::vector<double> ring_overlap_pmf(std::uint32_t ring_size,
                                     std::uint32_t pool_size) {
  const std::uint64_t K = ring_size;
  const std::uint64_t P = pool_size;
  if (K < 1 || K > P)
    throw std::invalid_argument("ring_overlap_pmf: need 1 <= K <= P");

  std::vector<double> pmf(K + 1, 0.0);
  const std::uint64_t low = (2 * K > P) ? 2 * K - P : 0;

  // Anchor rho at the bottom of the support, then walk up via
  //   rho_{u+1} / rho_u = (K-u)^2 / ((u+1) * (P - 2K + u + 1)).
  // The anchor and every step are short products of exact-ish factors, so
  // the result keeps ~1e-14 relative accuracy even for P ~ 1e5 where a
  // naive lgamma difference loses five digits.
  double anchor;
  if (low == 0) {
    // rho_0 = C(P-K,K)/C(P,K) = prod_{i<K} (P-K-i)/(P-i)
    anchor = 1.0;
    for (std::uint64_t i = 0; i < K; ++i)
      anchor *= static_cast<double>(P - K - i) / static_cast<double>(P - i);
  } else {
    // 2K > P forces at least 2K-P shared keys; C(P-K, K-low) = 1 there.
    anchor = std::exp(log_binomial(static_cast<double>(K),
                                   static_cast<double>(low)) -
                      log_binomial(static_cast<double>(P),
                                   static_cast<double>(K)));
  }
  pmf[low] = anchor;
  double rho = anchor;
  for (std::uint64_t u = low; u < K; ++u) {
    const double numer = static_cast<double>(K - u) * static_cast<double>(K - u);
    const auto gap = static_cast<std::int64_t>(P + u + 1) -
                     static_cast<std::int64_t>(2 * K);  // >= 1 on the support
    const double denom = static_cast<double>(u + 1) * static_cast<double>(gap);
    rho *= numer / denom;
    pmf[u + 1] = rho;
  }
  return pmf;
}

double prob_ring_overlap(const SchemeParams& scheme, std::uint32_t shared) {
  if (shared > scheme.ring_size)
    throw std::invalid_argument("prob_ring_overlap: u > K");
  return ring_overlap_pmf(scheme.ring_size, scheme.pool_size)[shared];
}

double key_setup_probability(const SchemeParams& scheme) {
  scheme.validate();
  const auto pmf = ring_overlap_pmf(scheme.ring_size, scheme.pool_size);
  double total = 0.0;
  for (std::uint32_t u = scheme.overlap; u <= scheme.ring_size; ++u)
    total += pmf[u];
  return std::min(total, 1.0);
}

double key_setup_proxy(const SchemeParams& scheme) {
  const double ratio = static_cast<double>(scheme.ring_size) *
                       static_cast<double>(scheme.ring_size) /
                       static_cast<double>(scheme.pool_size);
  double value = 1.0;
  for (std::uint32_t i = 1; i <= scheme.overlap; ++i)
    value *= ratio / static_cast<double>(i);
  return value;
}

double key_setup_probability_asymptotic(const SchemeParams& scheme) {
  scheme.validate();
  return std::clamp(key_setup_proxy(scheme), 0.0, 1.0);
}

RadiusLinkProbability radius_link_probability(const GeoParams& geo) {
  if (geo.region == RegionKind::FullVisibility)
    throw std::invalid_argument(
        "radius_link_probability: full visibility has no radius");
  if (!(geo.radius > 0.0) || geo.radius > 0.5)
    throw std::domain_error(
        "radius_link_probability: analytic formulas require 0 < r <= 1/2");

  const double disk = std::numbers::pi * geo.radius * geo.radius;
  RadiusLinkProbability out;
  out.point = disk;
  if (geo.region == RegionKind::UnitTorus) {
    out.lower = out.upper = disk;
  } else {
    const double interior = 1.0 - 2.0 * geo.radius;
    out.lower = interior * interior * disk;
    out.upper = disk;
  }
  return out;
}

std::uint32_t pool_size_for_key_setup(std::uint32_t ring_size,
                                      std::uint32_t overlap, double target) {
  if (!(target > 0.0) || !(target < 1.0))
    throw std::invalid_argument("pool_size_for_key_setup: need 0 < target < 1");
  if (overlap < 1 || overlap > ring_size)
    throw std::invalid_argument("pool_size_for_key_setup: need 1 <= q <= K");

  const auto setup = [&](std::uint32_t pool) {
    return key_setup_probability(
        SchemeParams{1, ring_size, pool, overlap});
  };
  if (setup(ring_size) < target)
    throw std::invalid_argument("pool_size_for_key_setup: unattainable target");

  // Grow an upper bracket where p_q drops below target, then bisect on the
  // monotone predicate p_q(P) >= target.
  const std::uint64_t max_pool = 0xFFFFFFFFull;
  std::uint64_t lo = ring_size;  // known good
  std::uint64_t hi = lo;
  while (setup(static_cast<std::uint32_t>(hi)) >= target) {
    lo = hi;
    if (hi == max_pool) return static_cast<std::uint32_t>(lo);
    hi = std::min(hi * 2, max_pool);
  }
  while (hi - lo > 1) {
    const auto mid = static_cast<std::uint32_t>(lo + (hi - lo) / 2);
    if (setup(mid) >= target)
      lo = mid;
    else
      hi = mid;
  }
  return static_cast<std::uint32_t>(lo);
}

double prob_ring_overlap_enumerated(const SchemeParams& scheme,
                                    std::uint32_t shared) {
  const std::uint32_t K = scheme.ring_size;
  const std::uint32_t P = scheme.pool_size;
  if (shared > K)
    throw std::invalid_argument("prob_ring_overlap_enumerated: u > K");
  const double total = binomial(P, K);
  if (!(total <= 1e5))
    throw std::invalid_argument(
        "prob_ring_overlap_enumerated: C(P,K) exceeds enumeration guard");

  // First ring fixed as {0..K-1}; enumerate every K-subset as the second
  // ring and count overlaps of exactly `shared`.
  std::vector<std::uint32_t> combo(K);
  for (std::uint32_t i = 0; i < K; ++i) combo[i] = i;
  std::uint64_t hits = 0, count = 0;
  while (true) {
    std::uint32_t overlap = 0;
    for (const auto id : combo) overlap += (id < K) ? 1 : 0;
    hits += (overlap == shared) ? 1 : 0;
    ++count;
    // next combination in lexicographic order
    std::int64_t pos = K - 1;
    while (pos >= 0 && combo[pos] == P - K + pos) --pos;
    if (pos < 0) break;
    ++combo[pos];
    for (auto fill = static_cast<std::uint32_t>(pos) + 1; fill < K; ++fill)
      combo[fill] = combo[fill - 1] + 1;
  }
  return static_cast<double>(hits) / static_cast<double>(count);
}

}  // namespace keymesh
