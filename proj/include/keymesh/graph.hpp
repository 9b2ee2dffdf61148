#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace keymesh {

/// Packs an unordered node pair (i < j) into one 64-bit edge code.
inline std::uint64_t edge_code(std::uint32_t i, std::uint32_t j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

/// Undirected simple graph with sorted per-node neighbor lists (CSR layout).
/// Immutable after construction.
class AdjacencyGraph {
 public:
  AdjacencyGraph() = default;

  /// Builds from packed edge codes (see edge_code). Duplicates and
  /// self-loops are rejected.
  static AdjacencyGraph from_edge_codes(std::uint32_t node_count,
                                        std::vector<std::uint64_t> edges);

  std::uint32_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  std::span<const std::uint32_t> neighbors(std::uint32_t node) const {
    return std::span<const std::uint32_t>(adjacency_)
        .subspan(offsets_[node], offsets_[node + 1] - offsets_[node]);
  }

  std::uint32_t degree(std::uint32_t node) const {
    return static_cast<std::uint32_t>(offsets_[node + 1] - offsets_[node]);
  }

  bool has_edge(std::uint32_t i, std::uint32_t j) const;

  /// Edges as packed codes with i < j, ascending. Useful for set algebra.
  std::vector<std::uint64_t> edge_codes() const;

  /// Text dump: header "n m", then one "i j" line per edge with i < j.
  void write_edge_list(std::ostream& out) const;
  static AdjacencyGraph read_edge_list(std::istream& in);

 private:
  std::uint32_t node_count_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> adjacency_;
};

/// Edge present iff present in every input graph. All inputs must share n.
AdjacencyGraph intersect_graphs(std::span<const AdjacencyGraph> graphs);

}  // namespace keymesh
