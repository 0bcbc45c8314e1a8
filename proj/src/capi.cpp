#include "citenet/citenet.h"

#include <algorithm>
#include <exception>
#include <new>
#include <string>

#include "citenet/cluster.hpp"
#include "citenet/companies.hpp"
#include "citenet/error.hpp"
#include "citenet/graph.hpp"
#include "citenet/ranking.hpp"
#include "citenet/report.hpp"

struct citenet_graph {
  citenet::CitationGraph graph;
};

struct citenet_result {
  citenet::RunResult result;
};

namespace {

thread_local std::string last_error;

citenet_status status_of(citenet::ErrorKind kind) {
  using citenet::ErrorKind;
  switch (kind) {
    case ErrorKind::Usage: return CITENET_E_USAGE;
    case ErrorKind::Io: return CITENET_E_IO;
    case ErrorKind::Validation: return CITENET_E_VALIDATION;
    case ErrorKind::NotFound: return CITENET_E_NOT_FOUND;
    case ErrorKind::Domain: return CITENET_E_DOMAIN;
    case ErrorKind::NonConvergence: return CITENET_E_NONCONVERGENCE;
  }
  return CITENET_E_INTERNAL;
}

citenet_status fail(citenet_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
citenet_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    return fn();
  } catch (const citenet::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CITENET_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CITENET_E_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

int citenet_exit_code(citenet_status status) {
  switch (status) {
    case CITENET_OK: return 0;
    case CITENET_E_USAGE:
    case CITENET_E_NOT_FOUND: return 1;
    case CITENET_E_NONCONVERGENCE: return 3;
    default: return 2;
  }
}

const char* citenet_status_name(citenet_status status) {
  switch (status) {
    case CITENET_OK: return "ok";
    case CITENET_E_USAGE: return "usage error";
    case CITENET_E_IO: return "i/o error";
    case CITENET_E_VALIDATION: return "validation error";
    case CITENET_E_NOT_FOUND: return "not found";
    case CITENET_E_DOMAIN: return "domain error";
    case CITENET_E_NONCONVERGENCE: return "non-convergence";
    case CITENET_E_BUFFER_TOO_SMALL: return "buffer too small";
    case CITENET_E_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* citenet_last_error(void) { return last_error.c_str(); }

citenet_status citenet_graph_load(const char* citations_path, int strict, citenet_graph** out) {
  return guarded([&] {
    if (!citations_path || !out) return fail(CITENET_E_USAGE, "null argument");
    const auto parsed = citenet::parse_citations_file(citations_path, {citenet::Encoding::Latin1,
                                                                       strict != 0});
    *out = new citenet_graph{citenet::CitationGraph::build(parsed.records)};
    return CITENET_OK;
  });
}

citenet_status citenet_graph_from_edges(const int64_t* citing, const int64_t* cited,
                                        size_t edge_count, citenet_graph** out) {
  return guarded([&] {
    if (!out || (edge_count > 0 && (!citing || !cited))) return fail(CITENET_E_USAGE, "null argument");
    std::vector<citenet::CitationRecord> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) {
      if (citing[i] == cited[i])
        return fail(CITENET_E_VALIDATION, "self-citation at index " + std::to_string(i));
      edges.push_back({citing[i], cited[i]});
    }
    *out = new citenet_graph{citenet::CitationGraph::build(edges)};
    return CITENET_OK;
  });
}

void citenet_graph_free(citenet_graph* graph) { delete graph; }

size_t citenet_graph_node_count(const citenet_graph* graph) {
  return graph ? graph->graph.node_count() : 0;
}

size_t citenet_graph_edge_count(const citenet_graph* graph) {
  return graph ? graph->graph.edge_count() : 0;
}

citenet_status citenet_graph_indegree(const citenet_graph* graph, int64_t id, size_t* out) {
  return guarded([&] {
    if (!graph || !out) return fail(CITENET_E_USAGE, "null argument");
    *out = graph->graph.indegree(id);
    return CITENET_OK;
  });
}

citenet_status citenet_graph_outdegree(const citenet_graph* graph, int64_t id, size_t* out) {
  return guarded([&] {
    if (!graph || !out) return fail(CITENET_E_USAGE, "null argument");
    *out = graph->graph.outdegree(id);
    return CITENET_OK;
  });
}

citenet_status citenet_pagerank(const citenet_graph* graph, double damping, unsigned max_iter,
                                double tolerance, int64_t* ids, double* scores, size_t capacity,
                                size_t* written) {
  return guarded([&] {
    if (!graph || !written) return fail(CITENET_E_USAGE, "null argument");
    const auto& g = graph->graph;
    *written = g.node_count();
    if (capacity < g.node_count() || !ids || !scores)
      return fail(CITENET_E_BUFFER_TOO_SMALL, "output buffers hold fewer entries than nodes");
    const auto pr = citenet::pagerank(g, {damping, max_iter, tolerance});
    std::copy(g.ids().begin(), g.ids().end(), ids);
    std::copy(pr.scores.begin(), pr.scores.end(), scores);
    return CITENET_OK;
  });
}

citenet_status citenet_neighborhood(const citenet_graph* graph, int64_t root, size_t depth,
                                    int closed, int64_t* members, size_t capacity, size_t* count) {
  return guarded([&] {
    if (!graph || !count) return fail(CITENET_E_USAGE, "null argument");
    citenet::NeighborhoodSpec spec;
    spec.depth = depth;
    spec.closed = closed != 0;
    const auto set = citenet::neighborhood(graph->graph, root, spec);
    *count = set.size();
    if (set.size() > capacity || (!set.empty() && !members))
      return fail(CITENET_E_BUFFER_TOO_SMALL, "member buffer too small");
    std::copy(set.begin(), set.end(), members);
    return CITENET_OK;
  });
}

citenet_status citenet_percentile_threshold(const uint64_t* values, size_t count,
                                            double percentile, uint64_t* out) {
  return guarded([&] {
    if (!out || (count > 0 && !values)) return fail(CITENET_E_USAGE, "null argument");
    std::vector<std::size_t> v(values, values + count);
    *out = citenet::percentile_threshold(v, percentile);
    return CITENET_OK;
  });
}

citenet_status citenet_pearson(const double* x, const double* y, size_t count, double* out) {
  return guarded([&] {
    if (!out || (count > 0 && (!x || !y))) return fail(CITENET_E_USAGE, "null argument");
    *out = citenet::pearson({x, count}, {y, count});
    return CITENET_OK;
  });
}

void citenet_options_init(citenet_options* options) {
  if (!options) return;
  const citenet::RunConfig defaults;
  *options = citenet_options{};
  options->id_col = -1;
  options->company_col = -1;
  options->date_col = -1;
  options->damping = defaults.pagerank.damping;
  options->max_iter = defaults.pagerank.max_iter;
  options->tolerance = defaults.pagerank.tolerance;
  options->depth = defaults.neighborhood.depth;
  options->max_depth = defaults.neighborhood.max_depth;
  options->histogram_split = defaults.histogram_split;
  options->bin_count = defaults.bin_count;
  options->partitions = defaults.partitions;
  options->percentile = defaults.percentile;
}

citenet_status citenet_run(const char* subcommand, const citenet_options* options,
                           citenet_result** out) {
  return guarded([&] {
    if (!subcommand || !options || !out) return fail(CITENET_E_USAGE, "null argument");
    const auto cmd = citenet::parse_subcommand(subcommand);
    citenet::RunConfig cfg;
    if (options->citations_path) cfg.citation_path = options->citations_path;
    if (options->metadata_path) cfg.metadata_path = options->metadata_path;
    if (options->output_dir) cfg.output_dir = options->output_dir;
    if (options->encoding) cfg.encoding = options->encoding;
    cfg.strict = options->strict != 0;
    auto column = [](int c) -> std::optional<std::size_t> {
      if (c < 0) return std::nullopt;
      return static_cast<std::size_t>(c);
    };
    cfg.columns = {column(options->id_col), column(options->company_col), column(options->date_col)};
    cfg.top_k = options->top_k;
    cfg.pagerank = {options->damping, options->max_iter, options->tolerance};
    cfg.neighborhood.depth = options->depth;
    cfg.neighborhood.max_depth = options->max_depth;
    cfg.neighborhood.closed = options->closed != 0;
    if (options->export_format) cfg.export_format = options->export_format;
    if (options->seed_count > 0) {
      if (!options->seeds) return fail(CITENET_E_USAGE, "seed_count set without seeds");
      cfg.seeds.assign(options->seeds, options->seeds + options->seed_count);
    }
    cfg.histogram_split = options->histogram_split;
    cfg.bin_count = options->bin_count;
    cfg.partitions = options->partitions;
    cfg.percentile = options->percentile;
    if (options->degree_direction) cfg.degree_direction = options->degree_direction;

    *out = new citenet_result{citenet::run(cmd, cfg)};
    return CITENET_OK;
  });
}

const char* citenet_result_summary(const citenet_result* result) {
  return result ? result->result.summary.c_str() : "";
}

size_t citenet_result_warning_count(const citenet_result* result) {
  return result ? result->result.warnings.size() : 0;
}

const char* citenet_result_warning(const citenet_result* result, size_t index) {
  if (!result || index >= result->result.warnings.size()) return nullptr;
  return result->result.warnings[index].c_str();
}

size_t citenet_result_file_count(const citenet_result* result) {
  return result ? result->result.files.size() : 0;
}

const char* citenet_result_file(const citenet_result* result, size_t index) {
  if (!result || index >= result->result.files.size()) return nullptr;
  return result->result.files[index].c_str();
}

void citenet_result_free(citenet_result* result) { delete result; }

}  // extern "C"
