#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citenet/cluster.hpp"
#include "citenet/companies.hpp"
#include "citenet/ingest.hpp"
#include "citenet/ranking.hpp"

namespace citenet {

enum class Subcommand { Stats, Indegree, Pagerank, Clusters, Companies, Partitions };

Subcommand parse_subcommand(std::string_view name);
std::string_view subcommand_name(Subcommand cmd);

struct RunConfig {
  std::string citation_path;
  std::optional<std::string> metadata_path;
  std::string output_dir = ".";

  std::string encoding = "latin-1";
  bool strict = false;
  MetadataColumns columns;

  std::size_t top_k = 0;  // 0 picks the subcommand default
  PageRankConfig pagerank;
  NeighborhoodSpec neighborhood;
  std::optional<std::string> export_format;
  std::vector<PatentId> seeds;  // overrides top-k seed selection
  std::size_t histogram_split = 50;
  std::size_t bin_count = 15;
  std::size_t partitions = 3;
  double percentile = 75.0;
  std::string degree_direction = "out";

  // Checks every flag for `cmd` without touching the filesystem.
  void validate(Subcommand cmd) const;
  std::size_t effective_top_k(Subcommand cmd) const;
};

struct RunResult {
  std::string summary;  // for standard output
  std::vector<std::string> warnings;
  std::vector<std::string> files;  // paths written, in write order
};

// Runs one analysis end to end and writes its tables under cfg.output_dir.
// Errors surface as citenet::Error subclasses.
RunResult run(Subcommand cmd, const RunConfig& cfg);

// Fixed 6-decimal rendering used for probabilities and fractions.
std::string format_fixed6(double value);
// Shortest round-trip rendering, always with a '.' (e.g. "3.25", "2.0").
std::string format_full(double value);

}  // namespace citenet
