#include "keymesh/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace keymesh {

AdjacencyGraph AdjacencyGraph::from_edge_codes(
    std::uint32_t node_count, std::vector<std::uint64_t> edges) {
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("AdjacencyGraph: duplicate edge");

  AdjacencyGraph g;
  g.node_count_ = node_count;
  g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
  for (const auto code : edges) {
    const auto i = static_cast<std::uint32_t>(code >> 32);
    const auto j = static_cast<std::uint32_t>(code & 0xFFFFFFFFu);
    if (i == j) throw std::invalid_argument("AdjacencyGraph: self-loop");
    if (j >= node_count) throw std::invalid_argument("AdjacencyGraph: node id out of range");
    ++g.offsets_[i + 1];
    ++g.offsets_[j + 1];
  }
  for (std::size_t v = 1; v <= node_count; ++v) g.offsets_[v] += g.offsets_[v - 1];

  g.adjacency_.resize(edges.size() * 2);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto code : edges) {
    const auto i = static_cast<std::uint32_t>(code >> 32);
    const auto j = static_cast<std::uint32_t>(code & 0xFFFFFFFFu);
    g.adjacency_[cursor[i]++] = j;
    g.adjacency_[cursor[j]++] = i;
  }
  // Edge codes are sorted by (i, j), so rows for i come out ascending; rows
  // for the high endpoint j also ascend because i ascends. No per-row sort.
  return g;
}

bool AdjacencyGraph::has_edge(std::uint32_t i, std::uint32_t j) const {
  const auto row = neighbors(i);
  return std::binary_search(row.begin(), row.end(), j);
}

std::vector<std::uint64_t> AdjacencyGraph::edge_codes() const {
  std::vector<std::uint64_t> codes;
  codes.reserve(edge_count());
  for (std::uint32_t i = 0; i < node_count_; ++i)
    for (const auto j : neighbors(i))
      if (i < j) codes.push_back(edge_code(i, j));
  return codes;
}

void AdjacencyGraph::write_edge_list(std::ostream& out) const {
  out << node_count_ << ' ' << edge_count() << '\n';
  for (std::uint32_t i = 0; i < node_count_; ++i)
    for (const auto j : neighbors(i))
      if (i < j) out << i << ' ' << j << '\n';
}

AdjacencyGraph AdjacencyGraph::read_edge_list(std::istream& in) {
  std::uint32_t n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m))
    throw std::runtime_error("edge list: bad header");
  std::vector<std::uint64_t> codes;
  codes.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    std::uint32_t i = 0, j = 0;
    if (!(in >> i >> j)) throw std::runtime_error("edge list: truncated");
    codes.push_back(edge_code(i, j));
  }
  return from_edge_codes(n, std::move(codes));
}

AdjacencyGraph intersect_graphs(std::span<const AdjacencyGraph> graphs) {
  if (graphs.empty())
    throw std::invalid_argument("intersect_graphs: no inputs");
  const auto n = graphs.front().node_count();
  for (const auto& g : graphs)
    if (g.node_count() != n)
      throw std::invalid_argument("intersect_graphs: node count mismatch");

  // Pairwise sorted-list merge, smallest edge set first.
  std::size_t start = 0;
  for (std::size_t k = 1; k < graphs.size(); ++k)
    if (graphs[k].edge_count() < graphs[start].edge_count()) start = k;

  auto codes = graphs[start].edge_codes();
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    if (k == start) continue;
    const auto other = graphs[k].edge_codes();
    std::vector<std::uint64_t> kept;
    kept.reserve(std::min(codes.size(), other.size()));
    std::set_intersection(codes.begin(), codes.end(), other.begin(),
                          other.end(), std::back_inserter(kept));
    codes = std::move(kept);
  }
  return AdjacencyGraph::from_edge_codes(n, std::move(codes));
}

}  // namespace keymesh
