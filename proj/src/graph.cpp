#include "citenet/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "citenet/error.hpp"

namespace citenet {

namespace {

using IndexPair = std::pair<NodeIndex, NodeIndex>;

void fill_csr(std::vector<IndexPair>& pairs, std::size_t n, std::vector<std::size_t>& offsets,
              std::vector<NodeIndex>& targets) {
  std::sort(pairs.begin(), pairs.end());
  offsets.assign(n + 1, 0);
  targets.resize(pairs.size());
  for (const auto& [from, to] : pairs) ++offsets[from + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  for (std::size_t i = 0; i < pairs.size(); ++i) targets[i] = pairs[i].second;
}

}  // namespace

CitationGraph CitationGraph::build(std::span<const CitationRecord> edges,
                                   std::span<const PatentId> extra_nodes) {
  CitationGraph g;
  g.ids_.reserve(edges.size() * 2 + extra_nodes.size());
  for (const auto& e : edges) {
    g.ids_.push_back(e.citing);
    g.ids_.push_back(e.cited);
  }
  g.ids_.insert(g.ids_.end(), extra_nodes.begin(), extra_nodes.end());
  std::sort(g.ids_.begin(), g.ids_.end());
  g.ids_.erase(std::unique(g.ids_.begin(), g.ids_.end()), g.ids_.end());
  g.ids_.shrink_to_fit();
  if (g.ids_.size() > std::numeric_limits<NodeIndex>::max())
    throw DomainError("graph exceeds " + std::to_string(std::numeric_limits<NodeIndex>::max()) +
                      " nodes");

  const auto n = g.ids_.size();
  std::vector<IndexPair> forward;
  forward.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.citing == e.cited) continue;
    forward.emplace_back(*g.index_of(e.citing), *g.index_of(e.cited));
  }
  std::sort(forward.begin(), forward.end());
  forward.erase(std::unique(forward.begin(), forward.end()), forward.end());

  std::vector<IndexPair> backward;
  backward.reserve(forward.size());
  for (const auto& [from, to] : forward) backward.emplace_back(to, from);

  fill_csr(forward, n, g.out_offsets_, g.out_targets_);
  fill_csr(backward, n, g.in_offsets_, g.in_sources_);
  return g;
}

GraphStats CitationGraph::stats() const {
  GraphStats s{node_count(), edge_count(), 0.0};
  if (s.node_count > 0)
    s.mean_outdegree = static_cast<double>(s.edge_count) / static_cast<double>(s.node_count);
  return s;
}

std::optional<NodeIndex> CitationGraph::index_of(PatentId id) const {
  const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<NodeIndex>(it - ids_.begin());
}

NodeIndex CitationGraph::require_index(PatentId id) const {
  const auto v = index_of(id);
  if (!v) throw NotFoundError("patent " + std::to_string(id) + " is not in the graph");
  return *v;
}

std::vector<PatentId> CitationGraph::predecessors(PatentId id) const {
  std::vector<PatentId> out;
  for (const auto u : in_neighbors(require_index(id))) out.push_back(ids_[u]);
  return out;
}

std::vector<PatentId> CitationGraph::successors(PatentId id) const {
  std::vector<PatentId> out;
  for (const auto w : out_neighbors(require_index(id))) out.push_back(ids_[w]);
  return out;
}

}  // namespace citenet
