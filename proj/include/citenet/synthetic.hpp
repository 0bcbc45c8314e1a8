#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "citenet/ingest.hpp"

namespace citenet::synthetic {

struct CitationModel {
  std::size_t nodes = 1000;
  std::size_t citations_per_node = 3;
  PatentId first_id = 1000000;
  std::uint64_t seed = 1;
};

// Preferential attachment: patents arrive in id order and each cites a
// Poisson(citations_per_node) number of distinct earlier patents, picked with
// probability proportional to (citations received + 1).
std::vector<CitationRecord> preferential_attachment(const CitationModel& model);

struct MetadataModel {
  std::size_t companies = 20;
  double company_fraction = 0.35;  // share of patents with a company
  double dated_fraction = 0.9;
  int first_year = 1950;
  int last_year = 2010;
  std::uint64_t seed = 2;
};

// One record per patent id in [first_id, first_id + nodes). Filing dates
// grow with the id, company sizes follow a Zipf-like law.
std::vector<PatentMetadata> metadata_for(const CitationModel& graph, const MetadataModel& model);

}  // namespace citenet::synthetic
