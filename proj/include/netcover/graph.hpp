#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netcover/errors.hpp"

namespace netcover {

/// Dense node index. Indices follow the bytewise lexicographic order of the
/// labels, so comparing indices is the same as comparing labels.
using NodeIndex = std::uint32_t;

using LabeledEdge = std::pair<std::string, std::string>;

/// Counts of input rows dropped while building a graph.
struct IngestWarnings {
  std::size_t duplicates = 0;
  std::size_t self_loops = 0;

  bool empty() const noexcept { return duplicates == 0 && self_loops == 0; }
};

/// Immutable simple directed graph with string labels.
///
/// Both adjacency directions are stored in CSR form with neighbor lists
/// sorted by index. Self-loops and duplicate edges never survive
/// construction.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Builds a graph from labels. Edge endpoints not listed in `nodes` are
  /// added as nodes. Empty labels throw std::invalid_argument.
  static DirectedGraph from_labels(std::vector<std::string> nodes,
                                   const std::vector<LabeledEdge>& edges,
                                   IngestWarnings* warnings = nullptr);

  /// Builds a graph from index pairs into `labels`, which must already be
  /// strictly increasing.
  static DirectedGraph from_indices(std::vector<std::string> labels,
                                    std::vector<std::pair<NodeIndex, NodeIndex>> edges,
                                    IngestWarnings* warnings = nullptr);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return out_targets_.size(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(NodeIndex v) const { return labels_.at(v); }

  std::optional<NodeIndex> find(std::string_view label) const;
  /// Throws LookupError for unknown labels.
  NodeIndex index_of(std::string_view label) const;

  std::span<const NodeIndex> in(NodeIndex v) const {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  std::span<const NodeIndex> out(NodeIndex v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::size_t in_degree(NodeIndex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }
  std::size_t out_degree(NodeIndex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }

  /// All edges ordered by (source, target).
  std::vector<std::pair<NodeIndex, NodeIndex>> edges() const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeIndex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeIndex> in_sources_;
};

/// Labels of every u with an edge u -> v. Throws LookupError.
std::vector<std::string> in_neighbors(const DirectedGraph& g, std::string_view v);

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  double density = 0.0;     // m / (n (n - 1))
  double avg_degree = 0.0;  // 2m / n, total degree
};

GraphStats graph_stats(const DirectedGraph& g);

}  // namespace netcover
