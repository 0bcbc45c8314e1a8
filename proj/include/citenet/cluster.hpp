#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citenet/graph.hpp"

namespace citenet {

struct NeighborhoodSpec {
  std::size_t depth = 1;
  bool closed = false;   // include the root itself
  std::size_t max_depth = 10;

  void validate() const;
};

// The n-neighborhood of a root: level 1 is every patent citing the root;
// level k adds every patent citing a member of level k-1. The open variant
// never contains the root, even when a citation cycle leads back to it.
// Result is sorted ascending. Throws NotFoundError for unknown roots.
std::vector<PatentId> neighborhood(const CitationGraph& g, PatentId root,
                                   const NeighborhoodSpec& spec = {});

// Per-root variant, one set per distinct root.
std::map<PatentId, std::vector<PatentId>> neighborhoods(const CitationGraph& g,
                                                        std::span<const PatentId> roots,
                                                        const NeighborhoodSpec& spec = {});

// Top-k by descending indegree, ties by ascending id.
std::vector<PatentId> top_seeds(const CitationGraph& g, std::size_t k);

struct Cluster {
  PatentId seed = 0;
  std::vector<PatentId> members;  // distinct ids
};

struct ClusterRow {
  PatentId seed = 0;
  std::size_t clustersize = 0;
  double percentunique = 0.0;
  std::size_t bignodes = 0;
  bool empty = false;  // percentunique set to 1.0 by convention
};

// percentunique: fraction of a cluster's members found in no other cluster.
// bignodes: how many of `seeds` sit inside the cluster.
std::vector<ClusterRow> overlap_report(std::span<const Cluster> clusters,
                                       std::span<const PatentId> seeds);

enum class ExportFormat { Dot, GraphML, EdgeListTsv };

ExportFormat parse_export_format(std::string_view name);
std::string_view file_extension(ExportFormat format);

// Induced subgraph on the closed neighborhood of `seed` (spec.closed is
// ignored). Nodes and edges come out in ascending id order.
std::string export_cluster(const CitationGraph& g, PatentId seed, const NeighborhoodSpec& spec,
                           ExportFormat format);

}  // namespace citenet
