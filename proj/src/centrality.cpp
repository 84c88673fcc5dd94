#include "netcover/centrality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

namespace netcover {

namespace {

constexpr std::array<std::pair<Measure, std::string_view>, 6> kMeasureNames{{
    {Measure::in_degree, "in_degree"},
    {Measure::out_degree, "out_degree"},
    {Measure::total_degree, "total_degree"},
    {Measure::betweenness, "betweenness"},
    {Measure::closeness, "closeness"},
    {Measure::eigenvector, "eigenvector"},
}};

constexpr std::size_t kSourceBlock = 32;

// Brandes single-source pass: adds every pair dependency delta_s(v) for this
// source into `acc`.
struct BrandesWorkspace {
  std::vector<std::size_t> order;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<long> dist;

  explicit BrandesWorkspace(std::size_t n) : sigma(n), delta(n), dist(n) { order.reserve(n); }

  void accumulate(const DirectedGraph& g, NodeIndex source, std::vector<double>& acc) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1L);
    order.clear();

    sigma[source] = 1.0;
    dist[source] = 0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const auto v = static_cast<NodeIndex>(order[head]);
      for (NodeIndex w : g.out(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Predecessors of w are the in-neighbors one BFS level closer.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto w = static_cast<NodeIndex>(*it);
      for (NodeIndex v : g.in(w)) {
        if (dist[v] >= 0 && dist[v] + 1 == dist[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != source) acc[w] += delta[w];
    }
  }
};

bool has_cycle(const DirectedGraph& g) {
  const auto n = g.node_count();
  std::vector<std::size_t> remaining(n);
  std::vector<NodeIndex> ready;
  for (NodeIndex v = 0; v < n; ++v) {
    remaining[v] = g.in_degree(v);
    if (remaining[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const auto v = ready.back();
    ready.pop_back();
    ++removed;
    for (NodeIndex w : g.out(v))
      if (--remaining[w] == 0) ready.push_back(w);
  }
  return removed < n;
}

double l2_norm(const std::vector<double>& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

}  // namespace

std::string_view to_string(Measure measure) {
  for (const auto& [m, name] : kMeasureNames)
    if (m == measure) return name;
  return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
  for (const auto& [m, n] : kMeasureNames)
    if (n == name) return m;
  return std::nullopt;
}

CentralityScores degree_centrality(const DirectedGraph& g, DegreeMode mode) {
  CentralityScores result;
  result.measure = mode == DegreeMode::in    ? Measure::in_degree
                   : mode == DegreeMode::out ? Measure::out_degree
                                             : Measure::total_degree;
  result.scores.resize(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    std::size_t d = 0;
    if (mode != DegreeMode::out) d += g.in_degree(v);
    if (mode != DegreeMode::in) d += g.out_degree(v);
    result.scores[v] = static_cast<double>(d);
  }
  return result;
}

CentralityScores betweenness_centrality(const DirectedGraph& g, std::size_t threads) {
  const auto n = g.node_count();
  const auto blocks = (n + kSourceBlock - 1) / kSourceBlock;
  std::vector<std::vector<double>> partial(blocks, std::vector<double>(n, 0.0));

  auto run_block = [&](std::size_t block, BrandesWorkspace& ws) {
    const auto first = block * kSourceBlock;
    const auto last = std::min(n, first + kSourceBlock);
    for (auto s = first; s < last; ++s) ws.accumulate(g, static_cast<NodeIndex>(s), partial[block]);
  };

  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(blocks, 1));
  if (threads == 1) {
    BrandesWorkspace ws(n);
    for (std::size_t b = 0; b < blocks; ++b) run_block(b, ws);
  } else {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        BrandesWorkspace ws(n);
        for (auto b = t; b < blocks; b += threads) run_block(b, ws);
      });
    }
  }

  CentralityScores result{Measure::betweenness, std::vector<double>(n, 0.0)};
  for (const auto& block : partial)
    for (std::size_t v = 0; v < n; ++v) result.scores[v] += block[v];
  return result;
}

CentralityScores closeness_centrality(const DirectedGraph& g) {
  const auto n = g.node_count();
  CentralityScores result{Measure::closeness, std::vector<double>(n, 0.0)};
  std::vector<long> dist(n);
  std::vector<NodeIndex> queue;
  queue.reserve(n);
  for (NodeIndex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1L);
    queue.assign(1, s);
    dist[s] = 0;
    std::size_t total = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto v = queue[head];
      total += static_cast<std::size_t>(dist[v]);
      for (NodeIndex w : g.out(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    const auto reached = static_cast<double>(queue.size() - 1);
    if (reached > 0)
      result.scores[s] = (reached / static_cast<double>(n - 1)) * (reached / static_cast<double>(total));
  }
  return result;
}

CentralityScores eigenvector_centrality(const DirectedGraph& g, PowerIterationOptions options) {
  if (g.edge_count() == 0) throw std::domain_error("eigenvector undefined: graph has no edges");
  const auto n = g.node_count();
  CentralityScores result{Measure::eigenvector, {}};

  if (!has_cycle(g)) {
    result.scores = degree_centrality(g, DegreeMode::in).scores;
    const auto norm = l2_norm(result.scores);
    for (auto& x : result.scores) x /= norm;
    result.fallback = true;
    return result;
  }

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);
  double previous_step = std::numeric_limits<double>::infinity();
  result.converged = false;
  for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
    for (NodeIndex v = 0; v < n; ++v) {
      double sum = x[v];
      for (NodeIndex u : g.in(v)) sum += x[u];
      next[v] = sum;
    }
    const auto norm = l2_norm(next);
    double diff = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      next[v] /= norm;
      diff += (next[v] - x[v]) * (next[v] - x[v]);
    }
    x.swap(next);
    // With contraction rate r the distance left to the fixed point is about
    // step * r / (1 - r), which exceeds the step itself once r > 1/2.
    const double step = std::sqrt(diff);
    const double rate = step / previous_step;
    previous_step = step;
    const double remaining = rate < 1.0 ? step * std::max(1.0, rate / (1.0 - rate)) : step;
    if (step < options.tolerance && remaining < options.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.scores = std::move(x);
  return result;
}

CentralityScores compute_centrality(const DirectedGraph& g, Measure measure, std::size_t threads) {
  switch (measure) {
    case Measure::in_degree:
      return degree_centrality(g, DegreeMode::in);
    case Measure::out_degree:
      return degree_centrality(g, DegreeMode::out);
    case Measure::total_degree:
      return degree_centrality(g, DegreeMode::total);
    case Measure::betweenness:
      return betweenness_centrality(g, threads);
    case Measure::closeness:
      return closeness_centrality(g);
    case Measure::eigenvector:
      return eigenvector_centrality(g);
  }
  throw std::logic_error("unhandled centrality measure");
}

Rank to_rank(const std::vector<double>& scores) {
  Rank rank(scores.size());
  std::iota(rank.begin(), rank.end(), NodeIndex{0});
  // Index order is label order, so a stable sort on score alone breaks ties
  // lexicographically.
  std::stable_sort(rank.begin(), rank.end(),
                   [&](NodeIndex a, NodeIndex b) { return scores[a] > scores[b]; });
  return rank;
}

Rank to_rank(const CentralityScores& scores) { return to_rank(scores.scores); }

}  // namespace netcover
