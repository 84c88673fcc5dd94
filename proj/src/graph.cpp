#include "netcover/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace netcover {

namespace {

using IndexEdge = std::pair<NodeIndex, NodeIndex>;

void build_csr(std::size_t n, const std::vector<IndexEdge>& sorted_edges, bool by_target,
               std::vector<std::size_t>& offsets, std::vector<NodeIndex>& neighbors) {
  offsets.assign(n + 1, 0);
  for (const auto& [s, t] : sorted_edges) ++offsets[(by_target ? t : s) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  neighbors.resize(sorted_edges.size());
  auto cursor = offsets;
  for (const auto& [s, t] : sorted_edges) {
    const NodeIndex key = by_target ? t : s;
    neighbors[cursor[key]++] = by_target ? s : t;
  }
}

}  // namespace

DirectedGraph DirectedGraph::from_indices(std::vector<std::string> labels,
                                          std::vector<IndexEdge> edges,
                                          IngestWarnings* warnings) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw std::invalid_argument("empty node label");
    if (i > 0 && !(labels[i - 1] < labels[i]))
      throw std::invalid_argument("node labels must be unique and sorted");
  }
  const auto n = labels.size();
  IngestWarnings counts;
  std::erase_if(edges, [&](const IndexEdge& e) {
    if (e.first >= n || e.second >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.first == e.second) {
      ++counts.self_loops;
      return true;
    }
    return false;
  });
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());
  counts.duplicates = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());

  DirectedGraph g;
  g.labels_ = std::move(labels);
  // Edges are sorted by (source, target), so each out-list comes out sorted
  // and each in-list is filled in increasing source order.
  build_csr(n, edges, false, g.out_offsets_, g.out_targets_);
  build_csr(n, edges, true, g.in_offsets_, g.in_sources_);
  if (warnings) *warnings = counts;
  return g;
}

DirectedGraph DirectedGraph::from_labels(std::vector<std::string> nodes,
                                         const std::vector<LabeledEdge>& edges,
                                         IngestWarnings* warnings) {
  for (const auto& [s, t] : edges) {
    nodes.push_back(s);
    nodes.push_back(t);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  auto lookup = [&](const std::string& label) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), label);
    return static_cast<NodeIndex>(it - nodes.begin());
  };
  std::vector<IndexEdge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [s, t] : edges) indexed.emplace_back(lookup(s), lookup(t));
  return from_indices(std::move(nodes), std::move(indexed), warnings);
}

std::optional<NodeIndex> DirectedGraph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<NodeIndex>(it - labels_.begin());
}

NodeIndex DirectedGraph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw LookupError(std::string(label));
}

std::vector<IndexEdge> DirectedGraph::edges() const {
  std::vector<IndexEdge> result;
  result.reserve(edge_count());
  for (NodeIndex s = 0; s < node_count(); ++s)
    for (NodeIndex t : out(s)) result.emplace_back(s, t);
  return result;
}

std::vector<std::string> in_neighbors(const DirectedGraph& g, std::string_view v) {
  std::vector<std::string> result;
  for (NodeIndex u : g.in(g.index_of(v))) result.push_back(g.label(u));
  return result;
}

GraphStats graph_stats(const DirectedGraph& g) {
  GraphStats stats;
  stats.n = g.node_count();
  stats.m = g.edge_count();
  const auto n = static_cast<double>(stats.n);
  const auto m = static_cast<double>(stats.m);
  if (stats.n >= 2) stats.density = m / (n * (n - 1.0));
  if (stats.n >= 1) stats.avg_degree = 2.0 * m / n;
  return stats;
}

}  // namespace netcover
