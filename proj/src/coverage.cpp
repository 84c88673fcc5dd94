#include "netcover/coverage.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace netcover {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 5> kMethodNames{{
    {Method::in_degree, "in_degree"},
    {Method::betweenness, "betweenness"},
    {Method::closeness, "closeness"},
    {Method::eigenvector, "eigenvector"},
    {Method::greedy, "greedy"},
}};

// Marks the coverage of v in `covered` and returns how many nodes were new.
std::size_t absorb(const DirectedGraph& g, NodeIndex v, std::vector<char>& covered) {
  std::size_t added = 0;
  auto mark = [&](NodeIndex u) {
    if (!covered[u]) {
      covered[u] = 1;
      ++added;
    }
  };
  mark(v);
  for (NodeIndex u : g.in(v)) mark(u);
  return added;
}

std::size_t marginal_gain(const DirectedGraph& g, NodeIndex v, const std::vector<char>& covered) {
  std::size_t gain = covered[v] ? 0 : 1;
  for (NodeIndex u : g.in(v)) gain += covered[u] ? 0 : 1;
  return gain;
}

}  // namespace

std::string_view to_string(Method method) {
  for (const auto& [m, name] : kMethodNames)
    if (m == method) return name;
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const auto& [m, n] : kMethodNames)
    if (n == name) return m;
  return std::nullopt;
}

std::vector<NodeIndex> node_coverage(const DirectedGraph& g, NodeIndex v) {
  const auto in = g.in(v);
  std::vector<NodeIndex> result(in.begin(), in.end());
  result.insert(std::upper_bound(result.begin(), result.end(), v), v);
  return result;
}

std::vector<std::string> node_coverage(const DirectedGraph& g, std::string_view v) {
  std::vector<std::string> result;
  for (NodeIndex u : node_coverage(g, g.index_of(v))) result.push_back(g.label(u));
  return result;
}

CoverageSet set_coverage(const DirectedGraph& g, std::span<const NodeIndex> nodes) {
  std::vector<char> covered(g.node_count(), 0);
  for (NodeIndex v : nodes) {
    if (v >= g.node_count()) throw std::out_of_range("node index out of range");
    absorb(g, v, covered);
  }
  CoverageSet result;
  for (NodeIndex v = 0; v < g.node_count(); ++v)
    if (covered[v]) result.covered.push_back(v);
  if (g.node_count() > 0)
    result.fraction = static_cast<double>(result.covered.size()) / static_cast<double>(g.node_count());
  return result;
}

SelectionResult greedy_select(const DirectedGraph& g, double target) {
  if (!(target > 0.0 && target <= 1.0))
    throw std::invalid_argument("target coverage must be in (0, 1]");
  const auto n = g.node_count();
  if (n == 0) throw std::invalid_argument("graph has no nodes");

  std::vector<NodeIndex> candidates(n);
  std::iota(candidates.begin(), candidates.end(), NodeIndex{0});
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](NodeIndex a, NodeIndex b) { return g.in_degree(a) > g.in_degree(b); });

  SelectionResult result;
  result.method = Method::greedy;
  result.target = target;
  std::vector<char> covered(n, 0);
  std::size_t covered_count = 0;

  while (static_cast<double>(covered_count) / static_cast<double>(n) < target) {
    std::size_t best_pos = candidates.size();
    std::size_t best_gain = 0;
    for (std::size_t pos = 0; pos < candidates.size(); ++pos) {
      const auto v = candidates[pos];
      if (best_pos != candidates.size() && best_gain >= g.in_degree(v) + 1) break;
      const auto gain = marginal_gain(g, v, covered);
      if (best_pos == candidates.size() || gain > best_gain) {
        best_pos = pos;
        best_gain = gain;
      }
    }
    if (best_pos == candidates.size() || best_gain == 0)
      throw std::logic_error("greedy selection stalled below full coverage");

    const auto pick = candidates[best_pos];
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best_pos));
    covered_count += absorb(g, pick, covered);
    result.picks.push_back(pick);
    result.covered.push_back(covered_count);
    result.cumulative.push_back(static_cast<double>(covered_count) / static_cast<double>(n));
  }
  return result;
}

SelectionResult centrality_rank_select(const DirectedGraph& g, const Rank& rank, std::size_t k,
                                       Method method) {
  const auto n = g.node_count();
  if (k < 1 || k > n) throw std::invalid_argument("k must be between 1 and the node count");
  if (rank.size() != n) throw std::invalid_argument("rank does not cover the node set");

  SelectionResult result;
  result.method = method;
  std::vector<char> covered(n, 0);
  std::size_t covered_count = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto v = rank[i];
    if (v >= n) throw std::out_of_range("node index out of range");
    covered_count += absorb(g, v, covered);
    result.picks.push_back(v);
    result.covered.push_back(covered_count);
    result.cumulative.push_back(static_cast<double>(covered_count) / static_cast<double>(n));
  }
  result.target = result.cumulative.back();
  return result;
}

SelectionResult truncate(SelectionResult result, std::size_t k) {
  if (k < result.picks.size()) {
    result.picks.resize(k);
    result.covered.resize(k);
    result.cumulative.resize(k);
  }
  return result;
}

}  // namespace netcover
