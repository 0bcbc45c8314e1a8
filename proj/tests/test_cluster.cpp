#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "citenet/cluster.hpp"
#include "citenet/error.hpp"
#include "support/oracles.hpp"

using namespace citenet;

namespace {

// 3 -> 2 -> 1
CitationGraph chain() {
  const std::vector<CitationRecord> edges{{3, 2}, {2, 1}};
  return CitationGraph::build(edges);
}

}  // namespace

TEST(Neighborhood, ChainDepths) {
  const auto g = chain();
  EXPECT_EQ(neighborhood(g, 1, {1, false}), (std::vector<PatentId>{2}));
  EXPECT_EQ(neighborhood(g, 1, {2, false}), (std::vector<PatentId>{2, 3}));
  EXPECT_EQ(neighborhood(g, 1, {1, true}), (std::vector<PatentId>{1, 2}));
  EXPECT_TRUE(neighborhood(g, 3).empty());
}

TEST(Neighborhood, CycleNeverReaddsRootToOpenSet) {
  const std::vector<CitationRecord> edges{{1, 2}, {2, 1}};
  const auto g = CitationGraph::build(edges);
  EXPECT_EQ(neighborhood(g, 1, {3, false}), (std::vector<PatentId>{2}));
}

TEST(Neighborhood, Errors) {
  const auto g = chain();
  EXPECT_THROW(neighborhood(g, 42), NotFoundError);
  EXPECT_THROW(neighborhood(g, 1, {0, false}), UsageError);
  EXPECT_THROW(neighborhood(g, 1, {11, false}), UsageError);
  EXPECT_NO_THROW(neighborhood(g, 1, {11, false, 12}));
}

TEST(Neighborhood, PerRootMapping) {
  const auto g = chain();
  const std::vector<PatentId> roots{1, 2, 1};
  const auto m = neighborhoods(g, roots);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.at(1), (std::vector<PatentId>{2}));
  EXPECT_EQ(m.at(2), (std::vector<PatentId>{3}));
}

TEST(Neighborhood, MonotoneOpenClosedAndDegree) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto es = oracle::random_digraph(rng, 3 + rng() % 60, 0.05);
    const auto g = CitationGraph::build(oracle::records(es), oracle::all_ids(es));
    for (std::size_t i = 0; i < es.n; ++i) {
      const auto root = oracle::id_of(i);
      EXPECT_EQ(neighborhood(g, root).size(), g.indegree(root));
      for (std::size_t k = 1; k < 4; ++k) {
        const auto small = neighborhood(g, root, {k, false});
        const auto big = neighborhood(g, root, {k + 1, false});
        EXPECT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end()));
        auto closed = neighborhood(g, root, {k, true});
        auto expected = small;
        expected.insert(std::lower_bound(expected.begin(), expected.end(), root), root);
        EXPECT_EQ(closed, expected);
      }
    }
  }
}

TEST(TopSeeds, StarCenterAndTieBreak) {
  std::vector<CitationRecord> edges;
  for (PatentId leaf = 10; leaf < 15; ++leaf) edges.push_back({leaf, 1});
  edges.push_back({10, 7});
  edges.push_back({11, 5});
  const auto g = CitationGraph::build(edges);
  EXPECT_EQ(top_seeds(g, 1), (std::vector<PatentId>{1}));
  EXPECT_EQ(top_seeds(g, 3), (std::vector<PatentId>{1, 5, 7}));
}

TEST(OverlapReport, DisjointAndIdentical) {
  const std::vector<Cluster> disjoint{{1, {10, 11}}, {2, {20, 21, 22}}};
  const std::vector<PatentId> seeds{1, 2};
  for (const auto& row : overlap_report(disjoint, seeds)) {
    EXPECT_DOUBLE_EQ(row.percentunique, 1.0);
    EXPECT_EQ(row.bignodes, 0u);
  }
  const std::vector<Cluster> same{{1, {5, 6}}, {2, {5, 6}}};
  for (const auto& row : overlap_report(same, seeds)) EXPECT_DOUBLE_EQ(row.percentunique, 0.0);
}

// Seeds 1 and 2; cluster of 2 contains seed 1 plus 30, cluster of 1 contains 30, 31.
// Node 30 is shared; 31 and seed node 1 are unique.
TEST(OverlapReport, BignodesCountsSeedsInside) {
  const std::vector<Cluster> clusters{{1, {30, 31}}, {2, {1, 30}}};
  const std::vector<PatentId> seeds{1, 2};
  const auto rows = overlap_report(clusters, seeds);
  EXPECT_EQ(rows[0].bignodes, 0u);
  EXPECT_DOUBLE_EQ(rows[0].percentunique, 0.5);
  EXPECT_EQ(rows[1].bignodes, 1u);
  EXPECT_DOUBLE_EQ(rows[1].percentunique, 0.5);
}

TEST(OverlapReport, EmptyClusterFlagged) {
  const std::vector<Cluster> clusters{{1, {}}, {2, {5}}};
  const std::vector<PatentId> seeds{1, 2};
  const auto rows = overlap_report(clusters, seeds);
  EXPECT_TRUE(rows[0].empty);
  EXPECT_DOUBLE_EQ(rows[0].percentunique, 1.0);
  EXPECT_THROW(overlap_report(std::vector<Cluster>{}, seeds), DomainError);
}

TEST(ExportCluster, ChainDot) {
  const auto dot = export_cluster(chain(), 1, {}, ExportFormat::Dot);
  EXPECT_EQ(dot,
            "digraph cluster_1 {\n"
            "  1 [shape=doublecircle];\n"
            "  2;\n"
            "  2 -> 1;\n"
            "}\n");
}

TEST(ExportCluster, GraphMLShape) {
  const auto xml = export_cluster(chain(), 1, {2, false}, ExportFormat::GraphML);
  EXPECT_NE(xml.find("edgedefault=\"directed\""), std::string::npos);
  EXPECT_NE(xml.find("<edge source=\"3\" target=\"2\"/>"), std::string::npos);
  EXPECT_NE(xml.find("<edge source=\"2\" target=\"1\"/>"), std::string::npos);
  EXPECT_EQ(xml.rfind("</graphml>\n"), xml.size() - 11);
}

TEST(ExportCluster, FormatNames) {
  EXPECT_EQ(parse_export_format("dot"), ExportFormat::Dot);
  EXPECT_EQ(parse_export_format("graphml"), ExportFormat::GraphML);
  EXPECT_EQ(parse_export_format("tsv"), ExportFormat::EdgeListTsv);
  EXPECT_THROW(parse_export_format("gexf"), UsageError);
}

// Re-parsing the TSV export must give back exactly the induced subgraph.
TEST(ExportCluster, TsvRoundTripsInducedSubgraph) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const auto es = oracle::random_digraph(rng, 30, 0.08);
    const auto g = CitationGraph::build(oracle::records(es), oracle::all_ids(es));
    const auto seed = oracle::id_of(rng() % es.n);
    const NeighborhoodSpec spec{2, false};
    const auto text = export_cluster(g, seed, spec, ExportFormat::EdgeListTsv);
    EXPECT_EQ(text, export_cluster(g, seed, spec, ExportFormat::EdgeListTsv));

    std::istringstream in(text);
    auto parsed = parse_citations(in).records;
    auto members = neighborhood(g, seed, {2, true});
    std::vector<CitationRecord> expected;
    for (const auto& [u, v] : es.edges) {
      const auto a = oracle::id_of(u), b = oracle::id_of(v);
      if (std::binary_search(members.begin(), members.end(), a) &&
          std::binary_search(members.begin(), members.end(), b))
        expected.push_back({a, b});
    }
    auto key = [](const CitationRecord& x, const CitationRecord& y) {
      return std::pair(x.citing, x.cited) < std::pair(y.citing, y.cited);
    };
    std::sort(expected.begin(), expected.end(), key);
    EXPECT_TRUE(std::is_sorted(parsed.begin(), parsed.end(), key));
    EXPECT_EQ(parsed, expected);
  }
}
