#pragma once

#include <cstdint>

namespace keymesh {

namespace detail {

// Finalizer from splitmix64 (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace detail

/// Counter-based random stream keyed by (master_seed, stream_index).
/// Streams with the same key produce identical sequences; distinct keys
/// give statistically independent sequences, so concurrent trials can each
/// own a stream and results do not depend on scheduling. split() derives a
/// child stream from the stream identity (not the draw position), so the
/// lane layout of an experiment is stable no matter how much either stream
/// has been consumed.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : key_(detail::mix64(detail::mix64(master_seed + detail::kGolden) ^
                           (stream_index * 0xD6E8FEB86659FD93ULL))),
        state_(key_) {}

  std::uint64_t next_u64() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bernoulli(double p) { return next_unit() < p; }

  /// Uniform integer in [0, bound) without modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t raw = next_u64();
    while (raw < threshold) raw = next_u64();
    return raw % bound;
  }

  /// Child stream for lane `lane`; independent of draw position.
  RngStream split(std::uint64_t lane) const {
    return RngStream(key_ ^ 0xA0761D6478BD642FULL, lane);
  }

  /// Stream identity, usable to key position-independent per-item coins.
  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t state_;
};

/// Stateless coin: decides item `item_index` with probability `p` under key
/// `key`. The outcome is a pure function of (key, item_index), so iteration
/// order cannot change it.
inline bool keyed_coin(std::uint64_t key, std::uint64_t item_index, double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  const double u =
      static_cast<double>(detail::mix64(key ^ detail::mix64(item_index)) >> 11) *
      0x1.0p-53;
  return u < p;
}

}  // namespace keymesh
