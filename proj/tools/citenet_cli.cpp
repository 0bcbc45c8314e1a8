// citenet command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "citenet/citenet.h"

namespace {

struct Flags {
  std::string citations;
  std::string metadata;
  std::string out = ".";
  std::string encoding = "latin-1";
  bool strict = false;
  int id_col = -1;
  int company_col = -1;
  int date_col = -1;
  std::size_t top_k = 0;
  double damping = 0.85;
  unsigned max_iter = 200;
  double tolerance = 1e-6;
  std::size_t depth = 1;
  std::size_t max_depth = 10;
  bool closed = false;
  std::string export_format;
  std::vector<std::int64_t> seeds;
  std::size_t histogram_split = 50;
  std::size_t bins = 15;
  std::size_t partitions = 3;
  double percentile = 75.0;
  std::string degree_direction = "out";
};

void add_shared(CLI::App* cmd, Flags& f) {
  cmd->add_option("--citations", f.citations, "citation TSV (citing, cited)")->required();
  cmd->add_option("--metadata", f.metadata, "metadata TSV (applnID, appMyName, filing date)");
  cmd->add_option("--out", f.out, "output directory")->capture_default_str();
  cmd->add_option("--encoding", f.encoding, "input encoding: latin-1 or utf-8")->capture_default_str();
  cmd->add_flag("--strict", f.strict, "fail on the first malformed row");
  cmd->add_option("--id-col", f.id_col, "0-based metadata id column");
  cmd->add_option("--company-col", f.company_col, "0-based metadata company column");
  cmd->add_option("--date-col", f.date_col, "0-based metadata filing-date column");
  cmd->add_option("--top-k", f.top_k, "rows / seeds / companies to report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"citenet: citation network analytics"};
  app.require_subcommand(1);
  Flags f;

  auto* stats = app.add_subcommand("stats", "node/edge counts, mean outdegree, metadata coverage");
  auto* indegree = app.add_subcommand("indegree", "top cited patents and indegree histogram");
  auto* pagerank = app.add_subcommand("pagerank", "PageRank table with indegree ranks");
  auto* clusters = app.add_subcommand("clusters", "seed neighborhoods and overlap metrics");
  auto* companies = app.add_subcommand("companies", "company size and degree metrics");
  auto* partitions = app.add_subcommand("partitions", "date histogram and chronological partitions");
  for (auto* cmd : {stats, indegree, pagerank, clusters, companies, partitions}) add_shared(cmd, f);

  indegree->add_option("--hist-split", f.histogram_split, "indegree separating under/over views")
      ->capture_default_str();
  pagerank->add_option("--damping", f.damping)->capture_default_str();
  pagerank->add_option("--max-iter", f.max_iter)->capture_default_str();
  pagerank->add_option("--tolerance", f.tolerance)->capture_default_str();
  clusters->add_option("--depth", f.depth, "reverse-citation steps from the seed")->capture_default_str();
  clusters->add_option("--max-depth", f.max_depth, "upper bound accepted for --depth")->capture_default_str();
  clusters->add_flag("--closed", f.closed, "include the seed in its cluster");
  clusters->add_option("--export", f.export_format, "per-seed export: dot, graphml or tsv");
  clusters->add_option("--seeds", f.seeds, "explicit seed ids instead of top-k")->delimiter(',');
  for (auto* cmd : {companies, partitions}) {
    cmd->add_option("--degree-direction", f.degree_direction, "out or in")->capture_default_str();
  }
  companies->add_option("--percentile", f.percentile)->capture_default_str();
  partitions->add_option("--bins", f.bins)->capture_default_str();
  partitions->add_option("--partitions", f.partitions)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  citenet_options opts;
  citenet_options_init(&opts);
  opts.citations_path = f.citations.c_str();
  opts.metadata_path = f.metadata.empty() ? nullptr : f.metadata.c_str();
  opts.output_dir = f.out.c_str();
  opts.encoding = f.encoding.c_str();
  opts.strict = f.strict ? 1 : 0;
  opts.id_col = f.id_col;
  opts.company_col = f.company_col;
  opts.date_col = f.date_col;
  opts.top_k = f.top_k;
  opts.damping = f.damping;
  opts.max_iter = f.max_iter;
  opts.tolerance = f.tolerance;
  opts.depth = f.depth;
  opts.max_depth = f.max_depth;
  opts.closed = f.closed ? 1 : 0;
  opts.export_format = f.export_format.empty() ? nullptr : f.export_format.c_str();
  opts.seeds = f.seeds.empty() ? nullptr : f.seeds.data();
  opts.seed_count = f.seeds.size();
  opts.histogram_split = f.histogram_split;
  opts.bin_count = f.bins;
  opts.partitions = f.partitions;
  opts.percentile = f.percentile;
  opts.degree_direction = f.degree_direction.c_str();

  const std::string name = app.get_subcommands().front()->get_name();
  citenet_result* result = nullptr;
  const auto status = citenet_run(name.c_str(), &opts, &result);
  if (status != CITENET_OK) {
    std::cerr << "citenet " << name << ": " << citenet_status_name(status) << ": "
              << citenet_last_error() << '\n';
    return citenet_exit_code(status);
  }
  for (std::size_t i = 0; i < citenet_result_warning_count(result); ++i)
    std::cerr << "warning: " << citenet_result_warning(result, i) << '\n';
  std::cout << citenet_result_summary(result);
  for (std::size_t i = 0; i < citenet_result_file_count(result); ++i)
    std::cout << "wrote " << citenet_result_file(result, i) << '\n';
  citenet_result_free(result);
  return 0;
}
