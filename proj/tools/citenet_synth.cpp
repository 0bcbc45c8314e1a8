// Writes a synthetic preferential-attachment citation file and matching
// metadata, for fixtures and scale runs.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "citenet/ingest.hpp"
#include "citenet/synthetic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"citenet-synth: synthetic citation data"};
  citenet::synthetic::CitationModel graph;
  citenet::synthetic::MetadataModel meta;
  std::string citations_path, metadata_path;
  app.add_option("--nodes", graph.nodes)->capture_default_str();
  app.add_option("--per-node", graph.citations_per_node, "citations made per patent")
      ->capture_default_str();
  app.add_option("--seed", graph.seed)->capture_default_str();
  app.add_option("--companies", meta.companies)->capture_default_str();
  app.add_option("--citations", citations_path)->required();
  app.add_option("--metadata", metadata_path);
  CLI11_PARSE(app, argc, argv);
  meta.seed = graph.seed + 1;

  std::ofstream cit(citations_path, std::ios::binary);
  citenet::write_citations(cit, citenet::synthetic::preferential_attachment(graph));
  if (!cit) {
    std::cerr << "cannot write " << citations_path << '\n';
    return 2;
  }
  if (!metadata_path.empty()) {
    std::ofstream md(metadata_path, std::ios::binary);
    citenet::write_metadata(md, citenet::synthetic::metadata_for(graph, meta));
    if (!md) {
      std::cerr << "cannot write " << metadata_path << '\n';
      return 2;
    }
  }
  return 0;
}
