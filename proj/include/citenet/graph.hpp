#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "citenet/ingest.hpp"
#include "citenet/types.hpp"

namespace citenet {

using NodeIndex = std::uint32_t;

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double mean_outdegree = 0.0;  // 0 for the empty graph
};

// Immutable directed citation graph. An edge runs from the citing patent to
// the cited one. Nodes are indexed 0..N-1 in ascending PatentId order, and
// both adjacency arrays are sorted, so iteration order is deterministic.
class CitationGraph {
 public:
  CitationGraph() = default;

  // Nodes are every edge endpoint plus extra_nodes; duplicate edges collapse.
  // Self-loops are dropped.
  static CitationGraph build(std::span<const CitationRecord> edges,
                             std::span<const PatentId> extra_nodes = {});

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return out_targets_.size(); }
  GraphStats stats() const;

  bool contains(PatentId id) const { return index_of(id).has_value(); }
  std::optional<NodeIndex> index_of(PatentId id) const;
  // Throws NotFoundError for ids outside the graph.
  NodeIndex require_index(PatentId id) const;
  PatentId id_at(NodeIndex v) const { return ids_[v]; }
  std::span<const PatentId> ids() const { return ids_; }

  std::size_t indegree(PatentId id) const { return in_degree_at(require_index(id)); }
  std::size_t outdegree(PatentId id) const { return out_degree_at(require_index(id)); }
  std::vector<PatentId> predecessors(PatentId id) const;
  std::vector<PatentId> successors(PatentId id) const;

  std::size_t in_degree_at(NodeIndex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }
  std::size_t out_degree_at(NodeIndex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::span<const NodeIndex> in_neighbors(NodeIndex v) const {
    return {in_sources_.data() + in_offsets_[v], in_degree_at(v)};
  }
  std::span<const NodeIndex> out_neighbors(NodeIndex v) const {
    return {out_targets_.data() + out_offsets_[v], out_degree_at(v)};
  }

 private:
  std::vector<PatentId> ids_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeIndex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeIndex> in_sources_;
};

}  // namespace citenet
