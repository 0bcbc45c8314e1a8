#include <gtest/gtest.h>

#include <random>

#include "citenet/error.hpp"
#include "citenet/graph.hpp"
#include "support/oracles.hpp"

using namespace citenet;

TEST(BuildGraph, DuplicateEdgesCollapse) {
  const std::vector<CitationRecord> edges{{1, 2}, {1, 2}, {3, 2}};
  const auto g = CitationGraph::build(edges);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(BuildGraph, ExtraNodesAreIsolated) {
  const std::vector<PatentId> extra{7};
  const auto g = CitationGraph::build({}, extra);
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.indegree(7), 0u);
  EXPECT_EQ(g.outdegree(7), 0u);
}

TEST(BuildGraph, EmptyInput) {
  const auto g = CitationGraph::build({});
  EXPECT_EQ(g.node_count(), 0u);
  EXPECT_EQ(g.stats().mean_outdegree, 0.0);
}

TEST(Degrees, DirectCounts) {
  const std::vector<CitationRecord> edges{{1, 2}, {3, 2}, {1, 3}};
  const auto g = CitationGraph::build(edges);
  EXPECT_EQ(g.indegree(2), 2u);
  EXPECT_EQ(g.outdegree(1), 2u);
  EXPECT_EQ(g.outdegree(2), 0u);  // sink
  EXPECT_EQ(g.predecessors(2), (std::vector<PatentId>{1, 3}));
  EXPECT_TRUE(g.predecessors(1).empty());  // source
  EXPECT_EQ(g.successors(1), (std::vector<PatentId>{2, 3}));
}

TEST(Degrees, UnknownNodeNotFound) {
  const std::vector<CitationRecord> edges{{1, 2}};
  const auto g = CitationGraph::build(edges);
  EXPECT_THROW(g.indegree(99), NotFoundError);
  EXPECT_THROW(g.outdegree(99), NotFoundError);
  EXPECT_THROW(g.predecessors(99), NotFoundError);
  EXPECT_THROW(g.successors(99), NotFoundError);
}

TEST(BuildGraph, Stats) {
  const std::vector<CitationRecord> edges{{1, 2}, {3, 2}};
  const auto s = CitationGraph::build(edges).stats();
  EXPECT_EQ(s.node_count, 3u);
  EXPECT_EQ(s.edge_count, 2u);
  EXPECT_DOUBLE_EQ(s.mean_outdegree, 2.0 / 3.0);
}

// Handshake and adjacency consistency on generated graphs, checked against
// the generator's own edge set.
TEST(GraphProperties, HandshakeAndAdjacencyConsistency) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = 2 + rng() % 60;
    const auto es = oracle::random_digraph(rng, n, 0.08);
    auto recs = oracle::records(es);
    // Feed some duplicates through as well.
    for (std::size_t i = 0; i < recs.size(); i += 3) recs.push_back(recs[i]);
    const auto ids = oracle::all_ids(es);
    const auto g = CitationGraph::build(recs, ids);

    ASSERT_EQ(g.node_count(), n);
    ASSERT_EQ(g.edge_count(), es.edges.size());
    std::size_t in_sum = 0, out_sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto id = oracle::id_of(i);
      std::size_t expected_in = 0, expected_out = 0;
      for (const auto& [u, v] : es.edges) {
        expected_in += v == i;
        expected_out += u == i;
      }
      EXPECT_EQ(g.indegree(id), expected_in);
      EXPECT_EQ(g.outdegree(id), expected_out);
      EXPECT_EQ(g.predecessors(id).size(), g.indegree(id));
      EXPECT_EQ(g.successors(id).size(), g.outdegree(id));
      for (const auto u : g.predecessors(id)) {
        const auto succ = g.successors(u);
        EXPECT_TRUE(std::binary_search(succ.begin(), succ.end(), id));
      }
      in_sum += g.indegree(id);
      out_sum += g.outdegree(id);
    }
    EXPECT_EQ(in_sum, g.edge_count());
    EXPECT_EQ(out_sum, g.edge_count());
  }
}
