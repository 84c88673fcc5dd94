#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netcover/centrality.hpp"
#include "netcover/coverage.hpp"
#include "netcover/graph.hpp"

namespace netcover {

/// Methods x ks grid of coverage fractions. cells[i][j] is the coverage of
/// methods[j] after ks[i] picks.
struct CoverageTable {
  std::vector<std::size_t> ks;
  std::vector<Method> methods;
  std::vector<std::vector<double>> cells;
  std::vector<std::string> warnings;
};

/// Empty entries mark measures whose scores are constant over the graph,
/// where rho is undefined.
struct RankCorrelationMatrix {
  Method reference = Method::greedy;
  std::vector<std::pair<Method, std::optional<double>>> entries;
  std::vector<std::string> warnings;
};

struct ParetoPoint {
  Method method = Method::greedy;
  std::size_t k = 0;
  std::size_t n = 0;
  double node_fraction = 0.0;
  double coverage = 0.0;
  double threshold = 0.8;
};

/// 1, 2, 3, 4, 5, 10, 20, 30, 40, 50, keeping those <= n.
std::vector<std::size_t> default_ks(std::size_t n);

/// The rank a centrality method selects from. Eigenvector on an edgeless
/// graph, where it is undefined, falls back to the (all-zero) in-degree
/// scores, i.e. plain label order. Substitutions are described in
/// `warnings` when given.
Rank method_rank(const DirectedGraph& g, Method method, std::size_t threads = 1,
                 std::vector<std::string>* warnings = nullptr);

/// Coverage after each k for every method in kAllMethods. The greedy column
/// comes from one run to full coverage, truncated at each k. Throws
/// std::invalid_argument if ks is empty, unsorted, or outside [1, n].
CoverageTable coverage_table(const DirectedGraph& g, std::span<const std::size_t> ks,
                             std::size_t threads = 1);

/// Ascending 1-based ranks, tied values sharing the average of their ranks.
std::vector<double> fractional_ranks(std::span<const double> values);

/// Spearman's rho: the Pearson correlation of the fractional ranks of `a` and
/// `b`. Tie-free inputs use the exact 1 - 6 sum(d^2) / (n (n^2 - 1)) form.
/// Throws std::invalid_argument for unequal lengths, n < 2, or a constant
/// input.
double spearman(std::span<const double> a, std::span<const double> b);

/// Rho between node positions in two ranks over the same node set.
double spearman(const Rank& a, const Rank& b);

/// Rho between the greedy order and each centrality measure. Greedy runs to
/// full coverage; picks take positions 1, 2, ... and nodes never picked share
/// the averaged tail position. Centrality positions are the tie-averaged
/// ranks of the scores, so equal scores share a position instead of being
/// split by label.
RankCorrelationMatrix rank_correlation_report(const DirectedGraph& g, std::size_t threads = 1);

/// Smallest k whose coverage under `method` reaches `threshold`.
ParetoPoint pareto_point(const DirectedGraph& g, Method method, double threshold = kDefaultTargetCoverage,
                         std::size_t threads = 1);

}  // namespace netcover
