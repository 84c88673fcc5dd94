#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "netcover/graph.hpp"

namespace netcover {

enum class GraphFormat { csv, json };

struct ParsedGraph {
  DirectedGraph graph;
  IngestWarnings warnings;
};

/// Parses an edge list.
///
/// csv: one `source,target[,ignored]` row per line. A first row whose first
/// field is `source` is a header. Blank lines and lines starting with `#` are
/// skipped, except `#node,<label>` which declares a node that may have no
/// edges.
///
/// json: `{"edges": [[s, t], ...], "nodes": [...]}` with `nodes` optional.
///
/// Throws ParseError on malformed rows and on input with no nodes.
ParsedGraph parse_edge_list(std::string_view text, GraphFormat format);

/// Sorted, byte-stable rendering that parse_edge_list reads back unchanged.
std::string serialize(const DirectedGraph& g, GraphFormat format);

/// `.json` selects json, anything else csv.
GraphFormat format_for_path(const std::filesystem::path& path);

/// Reads and parses a file; IO failures throw std::runtime_error.
ParsedGraph read_graph_file(const std::filesystem::path& path);
ParsedGraph read_graph_file(const std::filesystem::path& path, GraphFormat format);

}  // namespace netcover
