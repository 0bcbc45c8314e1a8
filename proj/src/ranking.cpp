#include "citenet/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "citenet/error.hpp"
#include "parallel.hpp"

namespace citenet {

namespace {

// Fixed block size keeps floating-point reduction order independent of the
// thread count.
constexpr std::size_t kBlock = 8192;
constexpr std::size_t kParallelThreshold = 4 * kBlock;

template <typename Fn>
void blocked(std::size_t n, Fn&& fn) {
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  auto body = [&](std::size_t b) { fn(b, b * kBlock, std::min(n, (b + 1) * kBlock)); };
  if (n < kParallelThreshold) {
    for (std::size_t b = 0; b < blocks; ++b) body(b);
  } else {
    detail::for_each_block(blocks, body);
  }
}

}  // namespace

void PageRankConfig::validate() const {
  if (!(damping > 0.0 && damping < 1.0))
    throw UsageError("damping must lie strictly between 0 and 1, got " + std::to_string(damping));
  if (max_iter < 1) throw UsageError("max_iter must be at least 1");
  if (!(tolerance > 0.0)) throw UsageError("tolerance must be positive");
}

PageRankResult pagerank(const CitationGraph& g, const PageRankConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.node_count();
  if (n == 0) throw DomainError("pagerank of an empty graph is undefined");

  const double inv_n = 1.0 / static_cast<double>(n);
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<double> x(n, inv_n), next(n), share(n);
  std::vector<double> dangling_parts(blocks), residual_parts(blocks);

  PageRankResult result;
  for (unsigned it = 1; it <= cfg.max_iter; ++it) {
    blocked(n, [&](std::size_t b, std::size_t lo, std::size_t hi) {
      double dangling = 0.0;
      for (std::size_t u = lo; u < hi; ++u) {
        const auto deg = g.out_degree_at(static_cast<NodeIndex>(u));
        if (deg == 0) {
          dangling += x[u];
          share[u] = 0.0;
        } else {
          share[u] = x[u] / static_cast<double>(deg);
        }
      }
      dangling_parts[b] = dangling;
    });
    const double dangling = std::accumulate(dangling_parts.begin(), dangling_parts.end(), 0.0);
    const double base = (cfg.damping * dangling + (1.0 - cfg.damping)) * inv_n;

    blocked(n, [&](std::size_t b, std::size_t lo, std::size_t hi) {
      double residual = 0.0;
      for (std::size_t v = lo; v < hi; ++v) {
        double acc = 0.0;
        for (const auto u : g.in_neighbors(static_cast<NodeIndex>(v))) acc += share[u];
        next[v] = base + cfg.damping * acc;
        residual += std::abs(next[v] - x[v]);
      }
      residual_parts[b] = residual;
    });
    x.swap(next);
    result.iterations = it;
    result.residual = std::accumulate(residual_parts.begin(), residual_parts.end(), 0.0);
    if (result.residual < static_cast<double>(n) * cfg.tolerance) {
      result.scores = std::move(x);
      return result;
    }
  }
  throw NonConvergenceError("pagerank did not converge in " + std::to_string(cfg.max_iter) +
                                " iterations (residual " + std::to_string(result.residual) + ")",
                            result.residual, result.iterations);
}

std::vector<std::size_t> assign_ranks(std::span<const double> scores,
                                      std::span<const PatentId> ids) {
  if (scores.size() != ids.size()) throw DomainError("scores and ids differ in length");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return ids[a] < ids[b];
  });
  std::vector<std::size_t> ranks(scores.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = r + 1;
  return ranks;
}

std::vector<RankRow> rank_table(const CitationGraph& g, std::span<const double> pagescores) {
  const std::size_t n = g.node_count();
  if (pagescores.size() != n) throw DomainError("one pagescore per node required");
  std::vector<double> indeg(n);
  for (std::size_t v = 0; v < n; ++v)
    indeg[v] = static_cast<double>(g.in_degree_at(static_cast<NodeIndex>(v)));
  const auto page_ranks = assign_ranks(pagescores, g.ids());
  const auto indeg_ranks = assign_ranks(indeg, g.ids());

  std::vector<RankRow> rows(n);
  for (std::size_t v = 0; v < n; ++v) {
    rows[page_ranks[v] - 1] = RankRow{g.id_at(static_cast<NodeIndex>(v)), pagescores[v],
                                      page_ranks[v], g.in_degree_at(static_cast<NodeIndex>(v)),
                                      indeg_ranks[v]};
  }
  return rows;
}

std::vector<std::pair<PatentId, std::size_t>> indegree_table(const CitationGraph& g,
                                                             std::size_t top_k) {
  if (top_k < 1) throw UsageError("top_k must be at least 1");
  std::vector<std::pair<PatentId, std::size_t>> rows;
  rows.reserve(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v)
    rows.emplace_back(g.id_at(static_cast<NodeIndex>(v)),
                      g.in_degree_at(static_cast<NodeIndex>(v)));
  const auto k = std::min(top_k, rows.size());
  std::partial_sort(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(k), rows.end(),
                    [](const auto& a, const auto& b) {
                      if (a.second != b.second) return a.second > b.second;
                      return a.first < b.first;
                    });
  rows.resize(k);
  return rows;
}

DegreeHistogram degree_histogram(const CitationGraph& g) {
  DegreeHistogram h;
  h.node_count = g.node_count();
  std::vector<std::size_t> counts;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const auto d = g.in_degree_at(static_cast<NodeIndex>(v));
    if (d >= counts.size()) counts.resize(d + 1, 0);
    ++counts[d];
  }
  std::size_t running = 0;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    if (counts[d] == 0) continue;
    running += counts[d];
    h.bins.push_back(
        {d, counts[d], static_cast<double>(running) / static_cast<double>(h.node_count)});
  }
  return h;
}

std::vector<DegreeBin> DegreeHistogram::below(std::size_t max_value) const {
  std::vector<DegreeBin> out;
  for (const auto& b : bins)
    if (b.degree < max_value) out.push_back(b);
  return out;
}

std::vector<DegreeBin> DegreeHistogram::at_or_above(std::size_t max_value) const {
  std::vector<DegreeBin> out;
  for (const auto& b : bins)
    if (b.degree >= max_value) out.push_back(b);
  return out;
}

double DegreeHistogram::fraction_below(std::size_t value) const {
  if (node_count == 0) return 0.0;
  std::size_t count = 0;
  for (const auto& b : bins)
    if (b.degree < value) count += b.patents;
  return static_cast<double>(count) / static_cast<double>(node_count);
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("pearson: vectors differ in length");
  if (x.size() < 2) throw DomainError("pearson: at least two points required");
  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double e) { return e == v.front(); });
  };
  if (constant(x) || constant(y))
    throw DomainError("pearson: correlation undefined for a constant vector");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  return std::clamp(sxy / (std::sqrt(sxx) * std::sqrt(syy)), -1.0, 1.0);
}

}  // namespace citenet
