#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "netcover/graph.hpp"

namespace netcover {

/// Seeded synthetic digraphs.
///
/// Both generators draw from std::mt19937_64 (MT19937-64, whose output
/// stream is fixed by the C++ standard) and convert raw 64-bit words to
/// doubles as (word >> 11) * 2^-53. No std distribution is used, so a given
/// seed produces the same graph on every platform and standard library.
///
/// Nodes are labeled `n` followed by the zero-padded creation index, so
/// label order equals creation order.
namespace synth {

inline constexpr std::string_view kPrngName = "mt19937_64";

enum class Model { erdos_renyi, preferential_attachment };

struct SynthConfig {
  Model model = Model::preferential_attachment;
  std::size_t n = 2;
  double p = 0.0;                  // erdos_renyi
  std::size_t edges_per_node = 1;  // preferential_attachment
  std::uint64_t seed = 0;
};

std::string node_label(std::size_t index, std::size_t n);

/// Every ordered pair (u, v), u != v, visited in (u, v) order, is an edge
/// when the next uniform draw is below p. Throws std::invalid_argument
/// unless n >= 2 and 0 <= p <= 1.
DirectedGraph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Node i (i >= 1) emits min(edges_per_node, i) edges to distinct earlier
/// nodes, each target drawn with weight in_degree + 1 using the in-degrees
/// as they stood before node i arrived. Repeated targets are redrawn.
/// Throws std::invalid_argument unless n >= 2 and edges_per_node >= 1.
DirectedGraph gen_preferential(std::size_t n, std::size_t edges_per_node, std::uint64_t seed);

DirectedGraph generate(const SynthConfig& config);

}  // namespace synth
}  // namespace netcover
