#include "citenet/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "citenet/error.hpp"

namespace citenet {

namespace fs = std::filesystem;

std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string format_full(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  std::string s(buf, ptr);
  if (std::isfinite(value) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

Subcommand parse_subcommand(std::string_view name) {
  if (name == "stats") return Subcommand::Stats;
  if (name == "indegree") return Subcommand::Indegree;
  if (name == "pagerank") return Subcommand::Pagerank;
  if (name == "clusters") return Subcommand::Clusters;
  if (name == "companies") return Subcommand::Companies;
  if (name == "partitions") return Subcommand::Partitions;
  throw UsageError("unknown subcommand '" + std::string(name) + "'");
}

std::string_view subcommand_name(Subcommand cmd) {
  switch (cmd) {
    case Subcommand::Stats: return "stats";
    case Subcommand::Indegree: return "indegree";
    case Subcommand::Pagerank: return "pagerank";
    case Subcommand::Clusters: return "clusters";
    case Subcommand::Companies: return "companies";
    case Subcommand::Partitions: return "partitions";
  }
  return "?";
}

void RunConfig::validate(Subcommand cmd) const {
  if (citation_path.empty()) throw UsageError("--citations is required");
  parse_encoding(encoding);
  parse_degree_direction(degree_direction);
  pagerank.validate();
  neighborhood.validate();
  if (export_format) parse_export_format(*export_format);
  if (bin_count < 1) throw UsageError("--bins must be at least 1");
  if (partitions < 1) throw UsageError("--partitions must be at least 1");
  if (!(percentile > 0.0 && percentile < 100.0))
    throw UsageError("--percentile must lie strictly between 0 and 100");
  if ((cmd == Subcommand::Companies || cmd == Subcommand::Partitions) && !metadata_path)
    throw UsageError(std::string(subcommand_name(cmd)) + " requires --metadata");
}

std::size_t RunConfig::effective_top_k(Subcommand cmd) const {
  if (top_k > 0) return top_k;
  return cmd == Subcommand::Companies ? 25 : 10;
}

namespace {

struct Inputs {
  CitationParse citations;
  std::optional<MetadataParse> metadata;
  CitationGraph graph;
};

void note_diagnostics(const std::string& path, const IngestDiagnostics& d, RunResult& result) {
  if (d.rows_rejected > 0)
    result.warnings.push_back(path + ": rejected " + std::to_string(d.rows_rejected) + " of " +
                              std::to_string(d.rows_read) + " rows (" +
                              std::to_string(d.self_citations) + " self-citations)");
  if (d.duplicate_edges > 0)
    result.warnings.push_back(path + ": " + std::to_string(d.duplicate_edges) +
                              " duplicate citations collapsed");
  if (d.unparseable_dates > 0)
    result.warnings.push_back(path + ": " + std::to_string(d.unparseable_dates) +
                              " filing dates not in YYYY-MM-DD form, treated as missing");
}

Inputs load(const RunConfig& cfg, RunResult& result) {
  Inputs in;
  const auto encoding = parse_encoding(cfg.encoding);
  in.citations = parse_citations_file(cfg.citation_path, {encoding, cfg.strict});
  note_diagnostics(cfg.citation_path, in.citations.diagnostics, result);

  std::vector<PatentId> extra;
  if (cfg.metadata_path) {
    in.metadata = parse_metadata_file(*cfg.metadata_path, {encoding, cfg.strict, cfg.columns});
    note_diagnostics(*cfg.metadata_path, in.metadata->diagnostics, result);
    for (const auto& m : in.metadata->records) extra.push_back(m.id);
  }
  in.graph = CitationGraph::build(in.citations.records, extra);
  return in;
}

class OutputDir {
 public:
  OutputDir(const std::string& dir, RunResult& result) : dir_(dir), result_(result) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
  }

  void write(const std::string& name, const std::string& content) {
    const auto path = (dir_ / name).string();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) throw IoError("cannot write " + path);
    result_.files.push_back(path);
  }

 private:
  fs::path dir_;
  RunResult& result_;
};

double metadata_mean_degree(const Inputs& in, DegreeDirection dir) {
  if (!in.metadata || in.metadata->records.empty()) return 0.0;
  std::size_t sum = 0;
  for (const auto& m : in.metadata->records) sum += degree_or_zero(in.graph, m.id, dir);
  return static_cast<double>(sum) / static_cast<double>(in.metadata->records.size());
}

void run_stats(const RunConfig&, const Inputs& in, OutputDir& out, RunResult& result) {
  const auto s = in.graph.stats();
  std::ostringstream table, summary;
  table << "metric\tvalue\n";
  table << "nodes\t" << s.node_count << '\n';
  table << "edges\t" << s.edge_count << '\n';
  table << "mean_outdegree_all\t" << format_full(s.mean_outdegree) << '\n';
  summary << "nodes " << s.node_count << "\nedges " << s.edge_count << "\nmean outdegree (all nodes) "
          << format_full(s.mean_outdegree) << '\n';
  if (in.metadata) {
    const auto with_company = in.metadata->diagnostics.patents_with_company;
    const double coverage = s.node_count == 0 ? 0.0
                                              : static_cast<double>(with_company) /
                                                    static_cast<double>(s.node_count);
    const double meta_mean = metadata_mean_degree(in, DegreeDirection::Out);
    table << "mean_outdegree_metadata\t" << format_full(meta_mean) << '\n';
    table << "metadata_records\t" << in.metadata->records.size() << '\n';
    table << "patents_with_company\t" << with_company << '\n';
    table << "company_coverage\t" << format_fixed6(coverage) << '\n';
    summary << "mean outdegree (metadata patents) " << format_full(meta_mean) << '\n'
            << "company coverage " << with_company << '/' << s.node_count << " = "
            << format_fixed6(coverage) << '\n';
  }
  out.write("stats.tsv", table.str());
  result.summary = summary.str();
}

void run_indegree(const RunConfig& cfg, const Inputs& in, OutputDir& out, RunResult& result) {
  const auto k = cfg.effective_top_k(Subcommand::Indegree);
  std::ostringstream top, hist, summary;
  top << "applnID\tindegree\n";
  for (const auto& [id, deg] : indegree_table(in.graph, k)) {
    top << id << '\t' << deg << '\n';
    summary << id << '\t' << deg << '\n';
  }
  const auto h = degree_histogram(in.graph);
  hist << "indegree,patents,cumulative_fraction,view\n";
  for (const auto& b : h.bins)
    hist << b.degree << ',' << b.patents << ',' << format_fixed6(b.cumulative_fraction) << ','
         << (b.degree < cfg.histogram_split ? "under" : "over") << '\n';
  summary << "fraction with indegree < 5: " << format_fixed6(h.fraction_below(5)) << '\n'
          << "fraction with indegree < " << cfg.histogram_split << ": "
          << format_fixed6(h.fraction_below(cfg.histogram_split)) << '\n';
  out.write("indegree_top.tsv", top.str());
  out.write("indegree_hist.csv", hist.str());
  result.summary = summary.str();
}

void run_pagerank(const RunConfig& cfg, const Inputs& in, OutputDir& out, RunResult& result) {
  std::ostringstream table, summary;
  table << "applnID\tpagescore\tpage_rank\tindegree\tindegree_rank\n";
  if (in.graph.node_count() == 0) {
    result.warnings.push_back("empty graph: pagerank table has no rows");
    out.write("pagerank.tsv", table.str());
    return;
  }
  const auto pr = pagerank(in.graph, cfg.pagerank);
  const auto rows = rank_table(in.graph, pr.scores);
  for (const auto& r : rows)
    table << r.id << '\t' << format_fixed6(r.pagescore) << '\t' << r.page_rank << '\t' << r.indegree
          << '\t' << r.indegree_rank << '\n';

  std::vector<double> indeg(in.graph.node_count());
  for (std::size_t v = 0; v < indeg.size(); ++v)
    indeg[v] = static_cast<double>(in.graph.in_degree_at(static_cast<NodeIndex>(v)));
  std::string r_text = "undefined";
  try {
    r_text = format_fixed6(pearson(pr.scores, indeg));
  } catch (const DomainError&) {
    result.warnings.push_back("pearson correlation undefined (constant scores or indegrees)");
  }
  table << "# pearson_r\t" << r_text << '\n';
  table << "# iterations\t" << pr.iterations << '\n';

  const auto k = std::min(cfg.effective_top_k(Subcommand::Pagerank), rows.size());
  for (std::size_t i = 0; i < k; ++i)
    summary << rows[i].id << '\t' << format_fixed6(rows[i].pagescore) << '\t' << rows[i].page_rank
            << '\t' << rows[i].indegree << '\t' << rows[i].indegree_rank << '\n';
  summary << "pearson r (pagescore, indegree) " << r_text << '\n'
          << "converged after " << pr.iterations << " iterations\n";
  out.write("pagerank.tsv", table.str());
  result.summary = summary.str();
}

void run_clusters(const RunConfig& cfg, const Inputs& in, OutputDir& out, RunResult& result) {
  const auto seeds = cfg.seeds.empty()
                         ? top_seeds(in.graph, cfg.effective_top_k(Subcommand::Clusters))
                         : cfg.seeds;
  std::ostringstream table, sizes, summary;
  table << "applnID\tclustersize\tpercentunique\tbignodes\n";
  sizes << "applnID\tdepth\tsize\n";
  if (seeds.empty()) {
    result.warnings.push_back("no seeds: graph is empty");
    out.write("clusters.tsv", table.str());
    out.write("nhood_sizes.tsv", sizes.str());
    return;
  }

  std::vector<Cluster> clusters;
  for (const auto seed : seeds) clusters.push_back({seed, neighborhood(in.graph, seed, cfg.neighborhood)});
  for (const auto& row : overlap_report(clusters, seeds)) {
    table << row.seed << '\t' << row.clustersize << '\t' << format_fixed6(row.percentunique) << '\t'
          << row.bignodes << '\n';
    summary << row.seed << '\t' << row.clustersize << '\t' << format_fixed6(row.percentunique)
            << '\t' << row.bignodes << '\n';
    if (row.empty)
      result.warnings.push_back("cluster of " + std::to_string(row.seed) +
                                " is empty; percentunique reported as 1.0");
  }

  for (const auto seed : seeds) {
    for (std::size_t d = 1; d <= cfg.neighborhood.depth; ++d) {
      auto spec = cfg.neighborhood;
      spec.depth = d;
      sizes << seed << '\t' << d << '\t' << neighborhood(in.graph, seed, spec).size() << '\n';
    }
  }
  out.write("clusters.tsv", table.str());
  out.write("nhood_sizes.tsv", sizes.str());

  if (cfg.export_format) {
    const auto format = parse_export_format(*cfg.export_format);
    for (const auto seed : seeds)
      out.write("cluster_" + std::to_string(seed) + "." + std::string(file_extension(format)),
                export_cluster(in.graph, seed, cfg.neighborhood, format));
  }
  result.summary = summary.str();
}

void run_companies(const RunConfig& cfg, const Inputs& in, OutputDir& out, RunResult& result) {
  const auto dir = parse_degree_direction(cfg.degree_direction);
  const auto profiles = company_profiles(in.metadata->records);
  const auto ranking = summed_outdegree_ranking(in.graph, profiles, dir);

  std::vector<std::size_t> degrees(in.graph.node_count());
  for (std::size_t v = 0; v < degrees.size(); ++v)
    degrees[v] = dir == DegreeDirection::Out ? in.graph.out_degree_at(static_cast<NodeIndex>(v))
                                             : in.graph.in_degree_at(static_cast<NodeIndex>(v));
  std::optional<std::size_t> threshold;
  if (!degrees.empty()) threshold = percentile_threshold(degrees, cfg.percentile);

  std::ostringstream table, summary;
  table << "company\tcount\tsummed_outdegree\tsummed_rank\tnormalizedoutdeg\tcontribution_factor\n";
  for (const auto& p : top_companies(profiles, cfg.effective_top_k(Subcommand::Companies))) {
    const auto& sum = ranking.at(p.name);
    const double factor = threshold ? contribution_factor(in.graph, p, *threshold, dir) : 0.0;
    table << p.name << '\t' << p.patent_count() << '\t' << sum.sum << '\t' << sum.rank << '\t'
          << format_full(normalized_outdegree(in.graph, p, dir)) << '\t' << format_fixed6(factor)
          << '\n';
    summary << p.name << " (" << p.patent_count() << ") summed rank " << sum.rank
            << ", normalized " << format_fixed6(normalized_outdegree(in.graph, p, dir))
            << ", contribution " << format_fixed6(factor) << '\n';
  }
  const auto stats = in.graph.stats();
  table << "# degree_direction\t" << cfg.degree_direction << '\n';
  table << "# percentile\t" << format_full(cfg.percentile) << '\n';
  table << "# threshold\t" << (threshold ? std::to_string(*threshold) : "undefined") << '\n';
  table << "# mean_outdegree_all\t" << format_full(stats.mean_outdegree) << '\n';
  table << "# mean_outdegree_metadata\t" << format_full(metadata_mean_degree(in, dir)) << '\n';
  summary << "percentile threshold (" << format_full(cfg.percentile) << "): "
          << (threshold ? std::to_string(*threshold) : "undefined") << '\n';
  out.write("companies.tsv", table.str());
  result.summary = summary.str();
}

void run_partitions(const RunConfig& cfg, const Inputs& in, OutputDir& out, RunResult& result) {
  const auto dir = parse_degree_direction(cfg.degree_direction);
  const auto hist = date_histogram(in.metadata->records, cfg.bin_count);
  std::ostringstream bins, table, summary;
  bins << "start,end,count\n";
  for (const auto& b : hist.bins) bins << b.start.iso() << ',' << b.end.iso() << ',' << b.count << '\n';
  bins << "# undated," << hist.undated << '\n';

  const auto profiles = company_profiles(in.metadata->records);
  const auto dates = date_index(in.metadata->records);
  table << "company\tpartition\tstart\tend\tnormalizedoutdeg\tcount\ttotalcount\n";
  for (const auto& p : top_companies(profiles, cfg.effective_top_k(Subcommand::Partitions))) {
    PartitionResult parts;
    try {
      parts = partition_by_date(in.graph, p, dates, cfg.partitions, dir);
    } catch (const DomainError& e) {
      result.warnings.push_back(std::string("skipping: ") + e.what());
      continue;
    }
    if (parts.undated > 0)
      result.warnings.push_back(p.name + ": " + std::to_string(parts.undated) +
                                " undated patents excluded from partitioning");
    for (const auto& r : parts.rows) {
      table << r.company << '\t' << r.partition << '\t' << r.start.iso() << '\t' << r.end.iso()
            << '\t' << format_full(r.normalized_outdegree) << '\t' << r.count << '\t'
            << r.totalcount << '\n';
      summary << r.company << r.partition << '\t' << r.start.iso() << '\t' << r.end.iso() << '\t'
              << format_full(r.normalized_outdegree) << '\t' << r.count << '/' << r.totalcount
              << '\n';
    }
  }
  out.write("partitions.tsv", table.str());
  out.write("date_hist.csv", bins.str());
  result.summary = summary.str();
}

}  // namespace

RunResult run(Subcommand cmd, const RunConfig& cfg) {
  cfg.validate(cmd);
  RunResult result;
  const auto in = load(cfg, result);
  for (const auto seed : cfg.seeds) in.graph.require_index(seed);
  OutputDir out(cfg.output_dir, result);
  switch (cmd) {
    case Subcommand::Stats: run_stats(cfg, in, out, result); break;
    case Subcommand::Indegree: run_indegree(cfg, in, out, result); break;
    case Subcommand::Pagerank: run_pagerank(cfg, in, out, result); break;
    case Subcommand::Clusters: run_clusters(cfg, in, out, result); break;
    case Subcommand::Companies: run_companies(cfg, in, out, result); break;
    case Subcommand::Partitions: run_partitions(cfg, in, out, result); break;
  }
  return result;
}

}  // namespace citenet
