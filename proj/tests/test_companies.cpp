#include <gtest/gtest.h>

#include <random>

#include "citenet/companies.hpp"
#include "citenet/error.hpp"
#include "support/oracles.hpp"

using namespace citenet;

namespace {

PatentMetadata meta(PatentId id, std::optional<std::string> company, std::string date = "") {
  return {id, std::move(company), date.empty() ? std::nullopt : Date::parse_iso(date)};
}

}  // namespace

TEST(CompanyProfiles, GroupsByExactName) {
  const std::vector<PatentMetadata> md{meta(1, "kodak"), meta(2, "kodak"), meta(3, std::nullopt),
                                       meta(4, "Kodak")};
  const auto p = company_profiles(md);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.at("kodak").patent_count(), 2u);
  EXPECT_EQ(p.at("Kodak").patent_count(), 1u);
}

TEST(TopCompanies, OrderAndLimits) {
  const std::vector<PatentMetadata> md{meta(1, "b"), meta(2, "b"), meta(3, "a"), meta(4, "c"),
                                       meta(5, "a")};
  const auto p = company_profiles(md);
  const auto top = top_companies(p, 2);
  ASSERT_EQ(top.size(), 2u);
  EXPECT_EQ(top[0].name, "a");  // tie on count 2, name order
  EXPECT_EQ(top[1].name, "b");
  EXPECT_EQ(top_companies(p, 10).size(), 3u);
  const std::vector<PatentMetadata> single{meta(9, "solo")};
  EXPECT_EQ(top_companies(company_profiles(single), 25).front().name, "solo");
}

TEST(SummedOutdegree, RanksAllCompaniesAndMissingPatentsCountZero) {
  const std::vector<CitationRecord> edges{{1, 9}, {1, 8}, {2, 9}, {3, 9}, {3, 8}, {3, 7}};
  const auto g = CitationGraph::build(edges);
  const std::vector<PatentMetadata> md{meta(1, "x"), meta(2, "x"), meta(3, "y"), meta(100, "z"),
                                       meta(9, "w")};
  const auto p = company_profiles(md);
  const auto r = summed_outdegree_ranking(g, p);
  EXPECT_EQ(r.at("x").sum, 3u);
  EXPECT_EQ(r.at("y").sum, 3u);
  EXPECT_EQ(r.at("x").rank, 1u);
  EXPECT_EQ(r.at("y").rank, 2u);
  EXPECT_EQ(r.at("w").sum, 0u);
  EXPECT_EQ(r.at("z").sum, 0u);  // not in graph
  EXPECT_EQ(r.at("w").rank, 3u);
  EXPECT_EQ(r.at("z").rank, 4u);
  const auto in = summed_outdegree_ranking(g, p, DegreeDirection::In);
  EXPECT_EQ(in.at("w").sum, 3u);
  EXPECT_EQ(in.at("w").rank, 1u);
}

TEST(NormalizedOutdegree, MeanOverPatents) {
  const std::vector<CitationRecord> edges{{1, 2}, {1, 3}, {1, 4}};
  const auto g = CitationGraph::build(edges);
  EXPECT_DOUBLE_EQ(normalized_outdegree(g, {"one", {1}}), 3.0);
  EXPECT_DOUBLE_EQ(normalized_outdegree(g, {"two", {1, 55}}), 1.5);
  EXPECT_THROW(normalized_outdegree(g, {"none", {}}), DomainError);
}

TEST(Percentile, NearestRank) {
  const std::vector<std::size_t> v{1, 2, 3, 4};
  EXPECT_EQ(percentile_threshold(v, 75), 3u);
  EXPECT_EQ(percentile_threshold(v, 76), 4u);
  EXPECT_EQ(percentile_threshold(v, 25), 1u);
  const std::vector<std::size_t> same(17, 6);
  for (double p : {1.0, 50.0, 99.9}) EXPECT_EQ(percentile_threshold(same, p), 6u);
  EXPECT_THROW(percentile_threshold(std::vector<std::size_t>{}, 50), DomainError);
  EXPECT_THROW(percentile_threshold(v, 0), DomainError);
  EXPECT_THROW(percentile_threshold(v, 100), DomainError);
}

TEST(Percentile, MatchesScanOracle) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> v(1 + rng() % 300);
    for (auto& x : v) x = rng() % 40;
    const double p = 1 + static_cast<double>(rng() % 99);
    EXPECT_EQ(percentile_threshold(v, p), oracle::percentile_scan(v, p));
  }
}

TEST(ContributionFactor, Fractions) {
  const std::vector<CitationRecord> edges{{1, 2}, {1, 3}, {4, 2}};
  const auto g = CitationGraph::build(edges);
  const CompanyProfile p{"c", {1, 4, 77}};
  EXPECT_DOUBLE_EQ(contribution_factor(g, p, 2), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(contribution_factor(g, p, 0), 1.0);
  EXPECT_DOUBLE_EQ(contribution_factor(g, p, 5), 0.0);
  EXPECT_THROW(contribution_factor(g, {"none", {}}, 1), DomainError);
}

// Edges are min + floor(i * span / 15) days; the spread reproduces the
// first edges of a 1940-11-12 .. 2010-08-06 range (span 25469 days).
TEST(DateHistogram, FractionalEdgesPrintedAsDays) {
  const std::vector<PatentMetadata> md{meta(1, std::nullopt, "1940-11-12"),
                                       meta(2, std::nullopt, "2010-08-06"),
                                       meta(3, std::nullopt), meta(4, std::nullopt, "1945-07-06")};
  const auto h = date_histogram(md, 15);
  ASSERT_EQ(h.bin_count(), 15u);
  EXPECT_EQ(h.bins[0].start.iso(), "1940-11-12");
  EXPECT_EQ(h.bins[0].end.iso(), "1945-07-06");
  EXPECT_EQ(h.bins[1].start.iso(), "1945-07-06");
  EXPECT_EQ(h.bins[1].end.iso(), "1950-02-28");
  EXPECT_EQ(h.bins[13].end.iso(), "2005-12-12");
  EXPECT_EQ(h.bins[14].end.iso(), "2010-08-06");
  // 1945-07-06 is day 1697 after start, below the fractional edge 1697.93,
  // so it still belongs to the first bin.
  EXPECT_EQ(h.bins[0].count, 2u);
  EXPECT_EQ(h.bins[1].count, 0u);
  EXPECT_EQ(h.bins[14].count, 1u);  // max date lands in the closed last bin
  EXPECT_EQ(h.undated, 1u);
}

TEST(DateHistogram, SingleDateAndErrors) {
  const std::vector<PatentMetadata> md{meta(1, std::nullopt, "2000-01-01"),
                                       meta(2, std::nullopt, "2000-01-01")};
  const auto h = date_histogram(md, 15);
  EXPECT_EQ(h.bins[0].count, 2u);
  for (std::size_t i = 1; i < h.bin_count(); ++i) EXPECT_EQ(h.bins[i].count, 0u);
  EXPECT_THROW(date_histogram(std::vector<PatentMetadata>{meta(1, "x")}), DomainError);
}

TEST(DateHistogram, CountsSumToDated) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<PatentMetadata> md;
    std::size_t dated = 0;
    for (PatentId id = 0; id < 200; ++id) {
      if (rng() % 4 == 0) {
        md.push_back(meta(id, std::nullopt));
      } else {
        md.push_back({id, std::nullopt, Date::from_ymd(1950 + static_cast<int>(rng() % 60), 1 + rng() % 12, 1 + rng() % 28)});
        ++dated;
      }
    }
    const auto h = date_histogram(md, 1 + rng() % 30);
    std::size_t total = 0;
    for (const auto& b : h.bins) total += b.count;
    EXPECT_EQ(total, dated);
    for (std::size_t i = 1; i < h.bin_count(); ++i) EXPECT_EQ(h.bins[i].start, h.bins[i - 1].end);
  }
}

TEST(PartitionSizes, RemainderGoesLast) {
  EXPECT_EQ(partition_sizes(1673, 3), (std::vector<std::size_t>{557, 557, 559}));
  EXPECT_EQ(partition_sizes(1394, 3), (std::vector<std::size_t>{464, 464, 466}));
  EXPECT_EQ(partition_sizes(3, 3), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_THROW(partition_sizes(2, 3), DomainError);
}

TEST(PartitionByDate, ChronologicalThirds) {
  const std::vector<CitationRecord> edges{{1, 9}, {2, 9}, {2, 8}, {3, 9}, {4, 9}, {4, 8}, {4, 7}};
  const auto g = CitationGraph::build(edges);
  const std::vector<PatentMetadata> md{meta(4, "c", "1990-01-01"), meta(1, "c", "1980-05-05"),
                                       meta(3, "c", "1985-01-01"), meta(2, "c", "1980-05-05"),
                                       meta(5, "c")};
  const auto profiles = company_profiles(md);
  const auto r = partition_by_date(g, profiles.at("c"), date_index(md), 3);
  EXPECT_EQ(r.undated, 1u);
  ASSERT_EQ(r.rows.size(), 3u);
  // Sorted by (date, id) and split 1 | 2 | 3, 4.
  EXPECT_EQ(r.rows[0].count, 1u);
  EXPECT_EQ(r.rows[0].start.iso(), "1980-05-05");
  EXPECT_DOUBLE_EQ(r.rows[0].normalized_outdegree, 1.0);
  EXPECT_EQ(r.rows[1].count, 1u);
  EXPECT_DOUBLE_EQ(r.rows[1].normalized_outdegree, 2.0);
  EXPECT_EQ(r.rows[2].count, 2u);
  EXPECT_EQ(r.rows[2].start.iso(), "1985-01-01");
  EXPECT_EQ(r.rows[2].end.iso(), "1990-01-01");
  EXPECT_DOUBLE_EQ(r.rows[2].normalized_outdegree, 2.0);
  for (const auto& row : r.rows) EXPECT_EQ(row.totalcount, 4u);
}

TEST(PartitionByDate, TooFewDated) {
  const std::vector<PatentMetadata> md{meta(1, "c", "1990-01-01"), meta(2, "c", "1991-01-01"),
                                       meta(3, "c")};
  const auto g = CitationGraph::build({});
  const auto profiles = company_profiles(md);
  EXPECT_THROW(partition_by_date(g, profiles.at("c"), date_index(md), 3), DomainError);
}

TEST(DegreeDirection, Names) {
  EXPECT_EQ(parse_degree_direction("out"), DegreeDirection::Out);
  EXPECT_EQ(parse_degree_direction("in"), DegreeDirection::In);
  EXPECT_THROW(parse_degree_direction("both"), UsageError);
}
