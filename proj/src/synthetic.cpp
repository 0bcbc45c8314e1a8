#include "citenet/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace citenet::synthetic {

std::vector<CitationRecord> preferential_attachment(const CitationModel& model) {
  std::mt19937_64 rng(model.seed);
  std::vector<CitationRecord> edges;
  edges.reserve(model.nodes * model.citations_per_node);
  // Each node appears once on arrival and once per citation received, so a
  // uniform draw from `pool` is proportional to indegree + 1.
  std::vector<std::size_t> pool;
  pool.reserve(model.nodes * (model.citations_per_node + 1));
  std::vector<std::size_t> picked;
  std::poisson_distribution<std::size_t> count(static_cast<double>(model.citations_per_node));
  for (std::size_t v = 0; v < model.nodes; ++v) {
    const auto want = std::min(count(rng), v);
    picked.clear();
    while (picked.size() < want) {
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      const auto target = pool[pick(rng)];
      if (std::find(picked.begin(), picked.end(), target) == picked.end()) picked.push_back(target);
    }
    for (const auto target : picked) {
      edges.push_back({model.first_id + static_cast<PatentId>(v),
                       model.first_id + static_cast<PatentId>(target)});
      pool.push_back(target);
    }
    pool.push_back(v);
  }
  return edges;
}

std::vector<PatentMetadata> metadata_for(const CitationModel& graph, const MetadataModel& model) {
  std::mt19937_64 rng(model.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<double> weights(model.companies);
  for (std::size_t c = 0; c < model.companies; ++c) weights[c] = 1.0 / static_cast<double>(c + 1);
  std::discrete_distribution<std::size_t> company(weights.begin(), weights.end());

  const auto first = *Date::from_ymd(model.first_year, 1, 1);
  const auto last = *Date::from_ymd(model.last_year, 12, 31);
  const auto span = last.day_number() - first.day_number();

  std::vector<PatentMetadata> out;
  out.reserve(graph.nodes);
  for (std::size_t v = 0; v < graph.nodes; ++v) {
    PatentMetadata m{graph.first_id + static_cast<PatentId>(v), std::nullopt, std::nullopt};
    if (model.companies > 0 && unit(rng) < model.company_fraction)
      m.company = "company " + std::to_string(company(rng));
    if (unit(rng) < model.dated_fraction) {
      // Later ids file later, with some jitter.
      const double pos = (static_cast<double>(v) + unit(rng) * 50.0) /
                         (static_cast<double>(graph.nodes) + 50.0);
      m.filing_date = first.plus_days(static_cast<std::int64_t>(std::floor(pos * static_cast<double>(span))));
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace citenet::synthetic
