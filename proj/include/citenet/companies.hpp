#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "citenet/graph.hpp"
#include "citenet/ingest.hpp"

namespace citenet {

// Which per-patent degree the company metrics aggregate. Out counts
// references a patent makes; In counts citations it receives.
enum class DegreeDirection { Out, In };

DegreeDirection parse_degree_direction(std::string_view name);

// Degree of `id`, or 0 when the patent is not in the graph.
std::size_t degree_or_zero(const CitationGraph& g, PatentId id, DegreeDirection dir);

struct CompanyProfile {
  std::string name;
  std::vector<PatentId> patent_ids;  // ascending, distinct

  std::size_t patent_count() const { return patent_ids.size(); }
};

using CompanyProfiles = std::map<std::string, CompanyProfile>;

// Groups patents by exact company name; patents without a company are left out.
CompanyProfiles company_profiles(std::span<const PatentMetadata> metadata);

// Descending patent_count, ties by ascending name.
std::vector<CompanyProfile> top_companies(const CompanyProfiles& profiles, std::size_t k);

struct SummedDegree {
  std::size_t sum = 0;
  std::size_t rank = 0;  // over every company in `profiles`
};

std::map<std::string, SummedDegree> summed_outdegree_ranking(
    const CitationGraph& g, const CompanyProfiles& profiles,
    DegreeDirection dir = DegreeDirection::Out);

std::size_t summed_outdegree(const CitationGraph& g, const CompanyProfile& profile,
                             DegreeDirection dir = DegreeDirection::Out);

// Mean degree over the profile's patents. Throws DomainError when empty.
double normalized_outdegree(const CitationGraph& g, const CompanyProfile& profile,
                            DegreeDirection dir = DegreeDirection::Out);

// Nearest-rank percentile: the smallest v with at least p% of values <= v.
// Requires 0 < p < 100 and a non-empty input.
std::size_t percentile_threshold(std::span<const std::size_t> values, double p);

// Fraction of the profile's patents whose degree is >= threshold.
double contribution_factor(const CitationGraph& g, const CompanyProfile& profile,
                           std::size_t threshold, DegreeDirection dir = DegreeDirection::Out);

struct DateBin {
  Date start;
  Date end;
  std::size_t count = 0;
};

// Bin i covers [min + i*w, min + (i+1)*w) with w = (max - min) / bin_count
// days, the last bin closed at max. Edges are fractional internally and
// printed as the day they fall in.
struct DateHistogram {
  std::vector<DateBin> bins;
  std::size_t undated = 0;

  std::size_t bin_count() const { return bins.size(); }
};

DateHistogram date_histogram(std::span<const PatentMetadata> metadata, std::size_t bin_count = 15);

using DateIndex = std::unordered_map<PatentId, Date>;
DateIndex date_index(std::span<const PatentMetadata> metadata);

struct PartitionRow {
  std::string company;
  std::size_t partition = 0;
  Date start;
  Date end;
  double normalized_outdegree = 0.0;
  std::size_t count = 0;
  std::size_t totalcount = 0;  // dated patents partitioned
};

struct PartitionResult {
  std::vector<PartitionRow> rows;
  std::size_t undated = 0;  // profile patents excluded for lack of a date
};

// Sizes per partition: floor(n/k) for the first k-1, the remainder in the last.
std::vector<std::size_t> partition_sizes(std::size_t n, std::size_t k);

// Chronological split of the profile's dated patents, ordered by
// (filing date, id). Throws DomainError with fewer than k dated patents.
PartitionResult partition_by_date(const CitationGraph& g, const CompanyProfile& profile,
                                  const DateIndex& dates, std::size_t k = 3,
                                  DegreeDirection dir = DegreeDirection::Out);

}  // namespace citenet
