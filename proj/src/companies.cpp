#include "citenet/companies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "citenet/error.hpp"

namespace citenet {

DegreeDirection parse_degree_direction(std::string_view name) {
  if (name == "out") return DegreeDirection::Out;
  if (name == "in") return DegreeDirection::In;
  throw UsageError("degree direction must be 'out' or 'in', got '" + std::string(name) + "'");
}

std::size_t degree_or_zero(const CitationGraph& g, PatentId id, DegreeDirection dir) {
  const auto v = g.index_of(id);
  if (!v) return 0;
  return dir == DegreeDirection::Out ? g.out_degree_at(*v) : g.in_degree_at(*v);
}

CompanyProfiles company_profiles(std::span<const PatentMetadata> metadata) {
  CompanyProfiles profiles;
  for (const auto& m : metadata) {
    if (!m.company) continue;
    auto& p = profiles[*m.company];
    if (p.name.empty()) p.name = *m.company;
    p.patent_ids.push_back(m.id);
  }
  for (auto& [name, p] : profiles) {
    std::sort(p.patent_ids.begin(), p.patent_ids.end());
    p.patent_ids.erase(std::unique(p.patent_ids.begin(), p.patent_ids.end()), p.patent_ids.end());
  }
  return profiles;
}

namespace {

bool by_size(const CompanyProfile& a, const CompanyProfile& b) {
  if (a.patent_count() != b.patent_count()) return a.patent_count() > b.patent_count();
  return a.name < b.name;
}

}  // namespace

std::vector<CompanyProfile> top_companies(const CompanyProfiles& profiles, std::size_t k) {
  if (k < 1) throw UsageError("top_k must be at least 1");
  std::vector<const CompanyProfile*> order;
  order.reserve(profiles.size());
  for (const auto& [name, p] : profiles) order.push_back(&p);
  std::sort(order.begin(), order.end(),
            [](const CompanyProfile* a, const CompanyProfile* b) { return by_size(*a, *b); });
  std::vector<CompanyProfile> out;
  for (std::size_t i = 0; i < std::min(k, order.size()); ++i) out.push_back(*order[i]);
  return out;
}

std::size_t summed_outdegree(const CitationGraph& g, const CompanyProfile& profile,
                             DegreeDirection dir) {
  std::size_t sum = 0;
  for (const auto id : profile.patent_ids) sum += degree_or_zero(g, id, dir);
  return sum;
}

std::map<std::string, SummedDegree> summed_outdegree_ranking(const CitationGraph& g,
                                                             const CompanyProfiles& profiles,
                                                             DegreeDirection dir) {
  std::vector<std::pair<std::string, std::size_t>> sums;
  sums.reserve(profiles.size());
  for (const auto& [name, p] : profiles) sums.emplace_back(name, summed_outdegree(g, p, dir));
  std::sort(sums.begin(), sums.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::map<std::string, SummedDegree> out;
  for (std::size_t i = 0; i < sums.size(); ++i)
    out.emplace(sums[i].first, SummedDegree{sums[i].second, i + 1});
  return out;
}

double normalized_outdegree(const CitationGraph& g, const CompanyProfile& profile,
                            DegreeDirection dir) {
  if (profile.patent_ids.empty())
    throw DomainError("company '" + profile.name + "' has no patents");
  return static_cast<double>(summed_outdegree(g, profile, dir)) /
         static_cast<double>(profile.patent_count());
}

std::size_t percentile_threshold(std::span<const std::size_t> values, double p) {
  if (values.empty()) throw DomainError("percentile of an empty multiset is undefined");
  if (!(p > 0.0 && p < 100.0)) throw DomainError("percentile must lie strictly between 0 and 100");
  std::vector<std::size_t> sorted(values.begin(), values.end());
  const auto n = sorted.size();
  // Number of values that must lie at or below the threshold.
  auto needed = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n) / 100.0));
  needed = std::clamp<std::size_t>(needed, 1, n);
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(needed - 1),
                   sorted.end());
  return sorted[needed - 1];
}

double contribution_factor(const CitationGraph& g, const CompanyProfile& profile,
                           std::size_t threshold, DegreeDirection dir) {
  if (profile.patent_ids.empty())
    throw DomainError("company '" + profile.name + "' has no patents");
  const auto significant = std::count_if(
      profile.patent_ids.begin(), profile.patent_ids.end(),
      [&](PatentId id) { return degree_or_zero(g, id, dir) >= threshold; });
  return static_cast<double>(significant) / static_cast<double>(profile.patent_count());
}

DateHistogram date_histogram(std::span<const PatentMetadata> metadata, std::size_t bin_count) {
  if (bin_count < 1) throw UsageError("bin count must be at least 1");
  DateHistogram h;
  std::vector<std::int64_t> days;
  for (const auto& m : metadata) {
    if (m.filing_date)
      days.push_back(m.filing_date->day_number());
    else
      ++h.undated;
  }
  if (days.empty()) throw DomainError("no patent carries a filing date");
  const auto [lo_it, hi_it] = std::minmax_element(days.begin(), days.end());
  const std::int64_t lo = *lo_it;
  const std::int64_t span = *hi_it - lo;
  const auto bins = static_cast<std::int64_t>(bin_count);
  const Date first = Date(std::chrono::sys_days{std::chrono::days{lo}});

  h.bins.resize(bin_count);
  for (std::int64_t i = 0; i < bins; ++i) {
    h.bins[static_cast<std::size_t>(i)].start = first.plus_days(i * span / bins);
    h.bins[static_cast<std::size_t>(i)].end = first.plus_days((i + 1) * span / bins);
  }
  for (const auto d : days) {
    const std::int64_t idx = span == 0 ? 0 : std::min(bins - 1, (d - lo) * bins / span);
    ++h.bins[static_cast<std::size_t>(idx)].count;
  }
  return h;
}

DateIndex date_index(std::span<const PatentMetadata> metadata) {
  DateIndex index;
  for (const auto& m : metadata)
    if (m.filing_date) index.emplace(m.id, *m.filing_date);
  return index;
}

std::vector<std::size_t> partition_sizes(std::size_t n, std::size_t k) {
  if (k < 1) throw UsageError("partition count must be at least 1");
  if (n < k)
    throw DomainError("cannot split " + std::to_string(n) + " patents into " + std::to_string(k) +
                      " partitions");
  std::vector<std::size_t> sizes(k, n / k);
  sizes.back() = n - (k - 1) * (n / k);
  return sizes;
}

PartitionResult partition_by_date(const CitationGraph& g, const CompanyProfile& profile,
                                  const DateIndex& dates, std::size_t k, DegreeDirection dir) {
  PartitionResult result;
  std::vector<std::pair<Date, PatentId>> dated;
  for (const auto id : profile.patent_ids) {
    if (const auto it = dates.find(id); it != dates.end())
      dated.emplace_back(it->second, id);
    else
      ++result.undated;
  }
  if (dated.size() < k)
    throw DomainError("company '" + profile.name + "' has " + std::to_string(dated.size()) +
                      " dated patents, fewer than " + std::to_string(k) + " partitions");
  std::sort(dated.begin(), dated.end());

  const auto sizes = partition_sizes(dated.size(), k);
  std::size_t pos = 0;
  for (std::size_t part = 0; part < k; ++part) {
    const auto begin = dated.begin() + static_cast<std::ptrdiff_t>(pos);
    const auto end = begin + static_cast<std::ptrdiff_t>(sizes[part]);
    std::size_t sum = 0;
    for (auto it = begin; it != end; ++it) sum += degree_or_zero(g, it->second, dir);
    result.rows.push_back(PartitionRow{
        profile.name, part, begin->first, (end - 1)->first,
        static_cast<double>(sum) / static_cast<double>(sizes[part]), sizes[part], dated.size()});
    pos += sizes[part];
  }
  return result;
}

}  // namespace citenet
