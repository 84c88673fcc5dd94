#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "netcover/graph.hpp"

namespace netcover {

enum class Measure { in_degree, out_degree, total_degree, betweenness, closeness, eigenvector };

std::string_view to_string(Measure measure);
std::optional<Measure> parse_measure(std::string_view name);

/// One score per node, indexed by NodeIndex.
struct CentralityScores {
  Measure measure = Measure::in_degree;
  std::vector<double> scores;
  /// Set when a measure could not be computed as defined and a documented
  /// substitute was returned instead (eigenvector on acyclic graphs).
  bool fallback = false;
  /// False when eigenvector power iteration hit the iteration cap.
  bool converged = true;
};

/// Nodes ordered by (score descending, label ascending).
using Rank = std::vector<NodeIndex>;

enum class DegreeMode { in, out, total };

CentralityScores degree_centrality(const DirectedGraph& g, DegreeMode mode);

/// Raw (unnormalized) shortest-path betweenness over ordered pairs, computed
/// with Brandes' accumulation. Sources are split into fixed blocks whose
/// partial sums are added in block order, so the result does not depend on
/// `threads`.
CentralityScores betweenness_centrality(const DirectedGraph& g, std::size_t threads = 1);

/// Closeness over outgoing BFS distances, scaled by the reachable fraction:
/// (r / (n - 1)) * (r / D), where r nodes are reachable at total distance D.
CentralityScores closeness_centrality(const DirectedGraph& g);

struct PowerIterationOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 1000;
};

/// Dominant eigenvector of the transposed adjacency matrix, so a node scores
/// the sum of its in-neighbors' scores. L2-normalized.
///
/// Iterates x <- (A^T + I) x from the uniform vector; the identity shift has
/// the same eigenvectors and keeps periodic graphs (cycles, bipartite
/// graphs) from oscillating. Iteration stops once both the L2 step and the
/// remaining error it implies at the observed contraction rate fall below
/// `tolerance`. Acyclic graphs have spectral radius 0; for them
/// the normalized in-degree vector is returned with `fallback` set.
///
/// Throws std::domain_error when the graph has no edges.
CentralityScores eigenvector_centrality(const DirectedGraph& g, PowerIterationOptions options = {});

/// Dispatches on `measure`.
CentralityScores compute_centrality(const DirectedGraph& g, Measure measure, std::size_t threads = 1);

Rank to_rank(const CentralityScores& scores);
Rank to_rank(const std::vector<double>& scores);

}  // namespace netcover
