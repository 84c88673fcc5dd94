#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netcover/centrality.hpp"
#include "netcover/graph.hpp"

namespace netcover {

/// Selection strategies compared in the evaluation tables.
enum class Method { in_degree, betweenness, closeness, eigenvector, greedy };

inline constexpr Method kAllMethods[] = {Method::in_degree, Method::betweenness, Method::closeness,
                                         Method::eigenvector, Method::greedy};

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

inline constexpr double kDefaultTargetCoverage = 0.80;

struct CoverageSet {
  std::vector<NodeIndex> covered;  // ascending
  double fraction = 0.0;
};

struct SelectionResult {
  Method method = Method::greedy;
  std::vector<NodeIndex> picks;
  /// Covered node count after each pick.
  std::vector<std::size_t> covered;
  /// covered[i] / n.
  std::vector<double> cumulative;
  /// Requested coverage, or the coverage reached for fixed-k selections.
  double target = 1.0;
};

/// The node plus all of its in-neighbors, ascending. Its size is
/// in_degree(v) + 1.
std::vector<NodeIndex> node_coverage(const DirectedGraph& g, NodeIndex v);
std::vector<std::string> node_coverage(const DirectedGraph& g, std::string_view v);

CoverageSet set_coverage(const DirectedGraph& g, std::span<const NodeIndex> nodes);

/// Greedy high-coverage selection with a lazy scan.
///
/// Candidates are visited in (in-degree descending, label ascending) order.
/// A candidate's marginal gain can be at most in_degree + 1, so a round's
/// scan stops at the first unselected candidate whose bound does not exceed
/// the best gain already found. Equal gains go to the earliest candidate in
/// scan order. Output is identical to rescanning every candidate each round.
///
/// Stops at the first pick whose cumulative coverage reaches `target`.
/// Throws std::invalid_argument unless 0 < target <= 1.
SelectionResult greedy_select(const DirectedGraph& g, double target = kDefaultTargetCoverage);

/// First `k` entries of `rank` with coverage after each prefix. Cumulative
/// values here are only non-decreasing. Throws std::invalid_argument unless
/// 1 <= k <= n.
SelectionResult centrality_rank_select(const DirectedGraph& g, const Rank& rank, std::size_t k,
                                       Method method = Method::in_degree);

/// Keeps the first `k` picks (or all of them when fewer were made).
SelectionResult truncate(SelectionResult result, std::size_t k);

}  // namespace netcover
