#include "citenet/cluster.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "citenet/error.hpp"
#include "citenet/ranking.hpp"

namespace citenet {

namespace {

// Level-synchronous expansion along reversed edges; returns node indices in
// ascending order, root included.
std::vector<NodeIndex> expand(const CitationGraph& g, NodeIndex root, std::size_t depth) {
  std::vector<char> inside(g.node_count(), 0);
  std::vector<NodeIndex> members{root};
  std::vector<NodeIndex> frontier{root}, next;
  inside[root] = 1;
  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    next.clear();
    for (const auto v : frontier) {
      for (const auto u : g.in_neighbors(v)) {
        if (inside[u]) continue;
        inside[u] = 1;
        next.push_back(u);
        members.push_back(u);
      }
    }
    frontier.swap(next);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

void NeighborhoodSpec::validate() const {
  if (depth < 1) throw UsageError("neighborhood depth must be at least 1");
  if (depth > max_depth)
    throw UsageError("neighborhood depth " + std::to_string(depth) + " exceeds the cap of " +
                     std::to_string(max_depth));
}

std::vector<PatentId> neighborhood(const CitationGraph& g, PatentId root,
                                   const NeighborhoodSpec& spec) {
  spec.validate();
  const auto r = g.require_index(root);
  std::vector<PatentId> out;
  for (const auto v : expand(g, r, spec.depth)) {
    if (v == r && !spec.closed) continue;
    out.push_back(g.id_at(v));
  }
  return out;
}

std::map<PatentId, std::vector<PatentId>> neighborhoods(const CitationGraph& g,
                                                        std::span<const PatentId> roots,
                                                        const NeighborhoodSpec& spec) {
  std::map<PatentId, std::vector<PatentId>> out;
  for (const auto root : roots)
    if (!out.contains(root)) out.emplace(root, neighborhood(g, root, spec));
  return out;
}

std::vector<PatentId> top_seeds(const CitationGraph& g, std::size_t k) {
  std::vector<PatentId> seeds;
  for (const auto& [id, deg] : indegree_table(g, k)) seeds.push_back(id);
  return seeds;
}

std::vector<ClusterRow> overlap_report(std::span<const Cluster> clusters,
                                       std::span<const PatentId> seeds) {
  if (clusters.empty()) throw DomainError("overlap report needs at least one cluster");
  std::unordered_map<PatentId, std::size_t> membership;
  for (const auto& c : clusters)
    for (const auto m : c.members) ++membership[m];
  const std::unordered_set<PatentId> seed_set(seeds.begin(), seeds.end());

  std::vector<ClusterRow> rows;
  rows.reserve(clusters.size());
  for (const auto& c : clusters) {
    ClusterRow row;
    row.seed = c.seed;
    row.clustersize = c.members.size();
    std::size_t unique = 0;
    for (const auto m : c.members) {
      if (membership[m] == 1) ++unique;
      if (seed_set.contains(m)) ++row.bignodes;
    }
    if (c.members.empty()) {
      row.empty = true;
      row.percentunique = 1.0;
    } else {
      row.percentunique = static_cast<double>(unique) / static_cast<double>(c.members.size());
    }
    rows.push_back(row);
  }
  return rows;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "graphml") return ExportFormat::GraphML;
  if (name == "tsv" || name == "edgelist") return ExportFormat::EdgeListTsv;
  throw UsageError("unknown export format '" + std::string(name) +
                   "' (expected dot, graphml or tsv)");
}

std::string_view file_extension(ExportFormat format) {
  switch (format) {
    case ExportFormat::Dot: return "dot";
    case ExportFormat::GraphML: return "graphml";
    case ExportFormat::EdgeListTsv: return "tsv";
  }
  return "txt";
}

std::string export_cluster(const CitationGraph& g, PatentId seed, const NeighborhoodSpec& spec,
                           ExportFormat format) {
  spec.validate();
  const auto root = g.require_index(seed);
  const auto nodes = expand(g, root, spec.depth);
  std::vector<char> inside(g.node_count(), 0);
  for (const auto v : nodes) inside[v] = 1;

  // Node indices follow id order, so sorted indices give sorted ids.
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  for (const auto u : nodes)
    for (const auto w : g.out_neighbors(u))
      if (inside[w]) edges.emplace_back(u, w);

  std::ostringstream out;
  switch (format) {
    case ExportFormat::Dot:
      out << "digraph cluster_" << seed << " {\n";
      for (const auto v : nodes) {
        out << "  " << g.id_at(v);
        if (v == root) out << " [shape=doublecircle]";
        out << ";\n";
      }
      for (const auto& [u, w] : edges) out << "  " << g.id_at(u) << " -> " << g.id_at(w) << ";\n";
      out << "}\n";
      break;
    case ExportFormat::GraphML:
      out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
             "  <key id=\"seed\" for=\"node\" attr.name=\"seed\" attr.type=\"boolean\">\n"
             "    <default>false</default>\n"
             "  </key>\n";
      out << "  <graph id=\"cluster_" << seed << "\" edgedefault=\"directed\">\n";
      for (const auto v : nodes) {
        out << "    <node id=\"" << g.id_at(v) << "\"";
        if (v == root)
          out << "><data key=\"seed\">true</data></node>\n";
        else
          out << "/>\n";
      }
      for (const auto& [u, w] : edges)
        out << "    <edge source=\"" << g.id_at(u) << "\" target=\"" << g.id_at(w) << "\"/>\n";
      out << "  </graph>\n</graphml>\n";
      break;
    case ExportFormat::EdgeListTsv:
      out << "citing\tcited\n";
      for (const auto& [u, w] : edges) out << g.id_at(u) << '\t' << g.id_at(w) << '\n';
      break;
  }
  return out.str();
}

}  // namespace citenet
