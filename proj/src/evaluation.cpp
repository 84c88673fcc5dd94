#include "netcover/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <numeric>
#include <stdexcept>

namespace netcover {

namespace {

Measure measure_for(Method method) {
  switch (method) {
    case Method::in_degree:
      return Measure::in_degree;
    case Method::betweenness:
      return Measure::betweenness;
    case Method::closeness:
      return Measure::closeness;
    case Method::eigenvector:
      return Measure::eigenvector;
    case Method::greedy:
      break;
  }
  throw std::invalid_argument("greedy is not a centrality method");
}

constexpr Method kCentralityMethods[] = {Method::in_degree, Method::betweenness, Method::closeness,
                                         Method::eigenvector};

}  // namespace

std::vector<std::size_t> default_ks(std::size_t n) {
  std::vector<std::size_t> ks;
  for (std::size_t k : {1, 2, 3, 4, 5, 10, 20, 30, 40, 50})
    if (k <= n) ks.push_back(k);
  return ks;
}

Rank method_rank(const DirectedGraph& g, Method method, std::size_t threads, std::vector<std::string>* warnings) {
  const auto measure = measure_for(method);
  auto warn = [&](std::string text) {
    if (warnings) warnings->push_back(std::move(text));
  };
  if (measure == Measure::eigenvector && g.edge_count() == 0) {
    warn("eigenvector undefined on a graph without edges; ranking by label");
    return to_rank(degree_centrality(g, DegreeMode::in));
  }
  const auto scores = compute_centrality(g, measure, threads);
  if (scores.fallback) warn("eigenvector: graph is acyclic; ranking by in-degree");
  if (!scores.converged) warn("eigenvector: power iteration did not converge");
  return to_rank(scores);
}

CoverageTable coverage_table(const DirectedGraph& g, std::span<const std::size_t> ks, std::size_t threads) {
  const auto n = g.node_count();
  if (ks.empty()) throw std::invalid_argument("ks must not be empty");
  if (!std::is_sorted(ks.begin(), ks.end())) throw std::invalid_argument("ks must be sorted ascending");
  if (ks.front() < 1 || ks.back() > n)
    throw std::invalid_argument("ks must lie between 1 and the node count (" + std::to_string(n) + ")");

  CoverageTable table;
  table.ks.assign(ks.begin(), ks.end());
  table.methods.assign(std::begin(kAllMethods), std::end(kAllMethods));
  table.cells.assign(ks.size(), std::vector<double>(table.methods.size(), 0.0));

  for (std::size_t j = 0; j < table.methods.size(); ++j) {
    const auto method = table.methods[j];
    const auto selection = method == Method::greedy
                               ? greedy_select(g, 1.0)
                               : centrality_rank_select(g, method_rank(g, method, threads, &table.warnings), ks.back(), method);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      // Greedy stops at full coverage, possibly before k picks.
      const auto idx = std::min(ks[i], selection.cumulative.size()) - 1;
      table.cells[i][j] = selection.cumulative[idx];
    }
  }
  return table;
}

std::vector<double> fractional_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    auto j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share the mean of ranks i+1..j+1.
    const double shared = static_cast<double>(i + j + 2) / 2.0;
    for (auto t = i; t <= j; ++t) ranks[order[t]] = shared;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("spearman: inputs differ in length");
  const auto n = a.size();
  if (n < 2) throw std::invalid_argument("spearman: need at least two observations");
  const auto ra = fractional_ranks(a);
  const auto rb = fractional_ranks(b);

  auto integral = [](const std::vector<double>& r) {
    return std::all_of(r.begin(), r.end(), [](double x) { return x == std::floor(x); });
  };
  auto tie_free = [&](const std::vector<double>& r) {
    // Integral fractional ranks can still hide ties of odd size; they are
    // tie-free exactly when they form a permutation of 1..n.
    if (!integral(r)) return false;
    std::vector<char> seen(n + 1, 0);
    for (double x : r) {
      const auto k = static_cast<std::size_t>(x);
      if (seen[k]) return false;
      seen[k] = 1;
    }
    return true;
  };

  if (tie_free(ra) && tie_free(rb)) {
    long double sum_d2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto d = static_cast<long double>(ra[i]) - rb[i];
      sum_d2 += d * d;
    }
    const auto nn = static_cast<long double>(n);
    const auto denom = nn * (nn * nn - 1.0L);
    return static_cast<double>((denom - 6.0L * sum_d2) / denom);
  }

  const double mean = (static_cast<double>(n) + 1.0) / 2.0;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto da = ra[i] - mean;
    const auto db = rb[i] - mean;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) throw std::invalid_argument("spearman: constant input has no rank variance");
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double spearman(const Rank& a, const Rank& b) {
  if (a.size() != b.size()) throw std::invalid_argument("spearman: ranks cover different node sets");
  const auto n = a.size();
  std::vector<double> pa(n, -1.0), pb(n, -1.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] >= n || pa[a[i]] >= 0 || b[i] >= n || pb[b[i]] >= 0)
      throw std::invalid_argument("spearman: ranks cover different node sets");
    pa[a[i]] = static_cast<double>(i + 1);
    pb[b[i]] = static_cast<double>(i + 1);
  }
  return spearman(pa, pb);
}

RankCorrelationMatrix rank_correlation_report(const DirectedGraph& g, std::size_t threads) {
  const auto n = g.node_count();
  const auto greedy = greedy_select(g, 1.0);
  const auto picked = greedy.picks.size();
  const double tail = static_cast<double>(picked + 1 + n) / 2.0;
  std::vector<double> greedy_pos(n, tail);
  for (std::size_t i = 0; i < picked; ++i) greedy_pos[greedy.picks[i]] = static_cast<double>(i + 1);

  RankCorrelationMatrix report;
  for (auto method : kCentralityMethods) {
    const auto measure = measure_for(method);
    std::vector<double> negated;
    if (measure == Measure::eigenvector && g.edge_count() == 0) {
      report.warnings.push_back("eigenvector undefined on a graph without edges");
      report.entries.emplace_back(method, std::nullopt);
      continue;
    }
    const auto scores = compute_centrality(g, measure, threads);
    if (scores.fallback) report.warnings.push_back("eigenvector: graph is acyclic; using in-degree");
    if (!scores.converged) report.warnings.push_back("eigenvector: power iteration did not converge");
    // Negated so that the highest score takes position 1, like the first pick.
    for (double s : scores.scores) negated.push_back(-s);
    const bool constant = std::adjacent_find(negated.begin(), negated.end(), std::not_equal_to<>()) == negated.end();
    if (constant || n < 2) {
      report.warnings.push_back(std::string(to_string(method)) + ": constant scores, rho undefined");
      report.entries.emplace_back(method, std::nullopt);
    } else {
      report.entries.emplace_back(method, spearman(greedy_pos, negated));
    }
  }
  return report;
}

ParetoPoint pareto_point(const DirectedGraph& g, Method method, double threshold, std::size_t threads) {
  if (!(threshold > 0.0 && threshold <= 1.0)) throw std::invalid_argument("threshold must be in (0, 1]");
  const auto n = g.node_count();
  ParetoPoint point;
  point.method = method;
  point.n = n;
  point.threshold = threshold;

  if (method == Method::greedy) {
    const auto selection = greedy_select(g, threshold);
    point.k = selection.picks.size();
    point.coverage = selection.cumulative.back();
  } else {
    const auto selection = centrality_rank_select(g, method_rank(g, method, threads), n, method);
    const auto& cum = selection.cumulative;
    const auto hit = std::find_if(cum.begin(), cum.end(), [&](double c) { return c >= threshold; });
    point.k = static_cast<std::size_t>(hit - cum.begin()) + 1;
    point.coverage = *hit;
  }
  point.node_fraction = static_cast<double>(point.k) / static_cast<double>(n);
  return point;
}

}  // namespace netcover
