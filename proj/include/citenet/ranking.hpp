#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "citenet/graph.hpp"

namespace citenet {

struct PageRankConfig {
  double damping = 0.85;
  unsigned max_iter = 200;
  double tolerance = 1e-6;

  // Throws UsageError when a field is outside its range.
  void validate() const;
};

struct PageRankResult {
  std::vector<double> scores;  // indexed by NodeIndex
  unsigned iterations = 0;
  double residual = 0.0;  // L1 change of the final iteration
};

// Power iteration of the damped citation walk. Every node starts at 1/N. Each
// step, node v receives damping * sum(score(u) / outdegree(u)) over its
// citers plus (1 - damping) / N, and the mass sitting on dangling nodes is
// spread evenly over all nodes (scaled by damping). Stops once the L1 change
// drops below N * tolerance.
//
// Throws DomainError for an empty graph and NonConvergenceError when
// max_iter is reached first.
PageRankResult pagerank(const CitationGraph& g, const PageRankConfig& cfg = {});

// Ordinal 1-based ranks: descending score, ties by ascending id.
// ranks[i] belongs to (scores[i], ids[i]).
std::vector<std::size_t> assign_ranks(std::span<const double> scores,
                                      std::span<const PatentId> ids);

struct RankRow {
  PatentId id = 0;
  double pagescore = 0.0;
  std::size_t page_rank = 0;
  std::size_t indegree = 0;
  std::size_t indegree_rank = 0;
};

// One row per node, ordered by page_rank.
std::vector<RankRow> rank_table(const CitationGraph& g, std::span<const double> pagescores);

std::vector<std::pair<PatentId, std::size_t>> indegree_table(const CitationGraph& g,
                                                             std::size_t top_k);

struct DegreeBin {
  std::size_t degree = 0;
  std::size_t patents = 0;
  double cumulative_fraction = 0.0;  // share of nodes with indegree <= degree
};

struct DegreeHistogram {
  std::vector<DegreeBin> bins;  // only degrees that occur, ascending
  std::size_t node_count = 0;

  std::vector<DegreeBin> below(std::size_t max_value) const;
  std::vector<DegreeBin> at_or_above(std::size_t max_value) const;
  double fraction_below(std::size_t value) const;
};

DegreeHistogram degree_histogram(const CitationGraph& g);

// Product-moment correlation. Throws DomainError on size mismatch, fewer than
// two points, or a constant vector.
double pearson(std::span<const double> x, std::span<const double> y);

}  // namespace citenet
