#include "netcover/synth.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace netcover::synth {

namespace {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<std::string> make_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(node_label(i, n));
  return labels;
}

// Fenwick tree over integer weights for proportional sampling.
class WeightTree {
 public:
  explicit WeightTree(std::size_t n) : tree_(n + 1, 0) {}

  void add(std::size_t i, std::uint64_t w) {
    total_ += w;
    for (++i; i < tree_.size(); i += i & (~i + 1)) tree_[i] += w;
  }

  std::uint64_t total() const { return total_; }

  // Smallest i whose prefix sum exceeds `point` (point < total).
  std::size_t find(std::uint64_t point) const {
    std::size_t pos = 0;
    std::size_t step = 1;
    while (step * 2 < tree_.size()) step *= 2;
    for (; step > 0; step /= 2) {
      if (pos + step < tree_.size() && tree_[pos + step] <= point) {
        pos += step;
        point -= tree_[pos];
      }
    }
    return pos;
  }

 private:
  std::vector<std::uint64_t> tree_;
  std::uint64_t total_ = 0;
};

}  // namespace

std::string node_label(std::size_t index, std::size_t n) {
  const auto width = std::to_string(n > 0 ? n - 1 : 0).size();
  auto digits = std::to_string(index);
  return "n" + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

DirectedGraph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("erdos_renyi: n must be at least 2");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi: p must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex v = 0; v < n; ++v)
      if (u != v && uniform01(rng) < p) edges.emplace_back(u, v);
  return DirectedGraph::from_indices(make_labels(n), std::move(edges));
}

DirectedGraph gen_preferential(std::size_t n, std::size_t edges_per_node, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("preferential: n must be at least 2");
  if (edges_per_node < 1) throw std::invalid_argument("preferential: edges_per_node must be at least 1");
  std::mt19937_64 rng(seed);
  WeightTree weights(n);
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  std::vector<NodeIndex> targets;

  weights.add(0, 1);
  for (std::size_t i = 1; i < n; ++i) {
    const auto want = std::min(edges_per_node, i);
    targets.clear();
    while (targets.size() < want) {
      const auto point = static_cast<std::uint64_t>(uniform01(rng) * static_cast<double>(weights.total()));
      const auto t = static_cast<NodeIndex>(weights.find(std::min(point, weights.total() - 1)));
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (auto t : targets) {
      edges.emplace_back(static_cast<NodeIndex>(i), t);
      weights.add(t, 1);
    }
    weights.add(i, 1);
  }
  return DirectedGraph::from_indices(make_labels(n), std::move(edges));
}

DirectedGraph generate(const SynthConfig& config) {
  return config.model == Model::erdos_renyi ? gen_erdos_renyi(config.n, config.p, config.seed)
                                            : gen_preferential(config.n, config.edges_per_node, config.seed);
}

}  // namespace netcover::synth
