#include "netcover/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace netcover {

namespace {

constexpr std::string_view kNodeDirective = "#node,";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

ParsedGraph build(std::vector<std::string> nodes, const std::vector<LabeledEdge>& edges) {
  if (nodes.empty() && edges.empty()) throw ParseError("empty graph", 0);
  ParsedGraph parsed;
  parsed.graph = DirectedGraph::from_labels(std::move(nodes), edges, &parsed.warnings);
  return parsed;
}

ParsedGraph parse_csv(std::string_view text) {
  std::vector<std::string> nodes;
  std::vector<LabeledEdge> edges;
  bool first_row = true;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.starts_with(kNodeDirective)) {
      const auto label = trim(line.substr(kNodeDirective.size()));
      if (label.empty() || label.find(',') != std::string_view::npos)
        throw ParseError("malformed #node directive", line_no);
      nodes.emplace_back(label);
      continue;
    }
    if (line.front() == '#') continue;

    const auto fields = split_fields(line);
    if (first_row) {
      first_row = false;
      if (fields.front() == "source") continue;
    }
    if (fields.size() < 2 || fields.size() > 3)
      throw ParseError("expected 2 or 3 fields, got " + std::to_string(fields.size()), line_no);
    if (fields[0].empty() || fields[1].empty()) throw ParseError("empty node label", line_no);
    edges.emplace_back(std::string(fields[0]), std::string(fields[1]));
  }
  return build(std::move(nodes), edges);
}

std::string json_label(const nlohmann::json& value, const char* where) {
  std::string label;
  if (value.is_string())
    label = value.get<std::string>();
  else if (value.is_number_integer())
    label = value.dump();
  else
    throw ParseError(std::string(where) + ": node labels must be strings or integers", 0);
  if (label.empty()) throw ParseError(std::string(where) + ": empty node label", 0);
  return label;
}

ParsedGraph parse_json(std::string_view text) {
  if (trim(text).empty()) throw ParseError("empty graph", 0);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!doc.is_object()) throw ParseError("JSON graph must be an object", 0);

  std::vector<std::string> nodes;
  if (auto it = doc.find("nodes"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("'nodes' must be an array", 0);
    for (const auto& v : *it) nodes.push_back(json_label(v, "nodes"));
  }
  std::vector<LabeledEdge> edges;
  auto it = doc.find("edges");
  if (it == doc.end()) throw ParseError("missing 'edges'", 0);
  if (!it->is_array()) throw ParseError("'edges' must be an array", 0);
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto& pair = (*it)[i];
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("edge " + std::to_string(i) + " must be a [source, target] pair", 0);
    edges.emplace_back(json_label(pair[0], "edges"), json_label(pair[1], "edges"));
  }
  return build(std::move(nodes), edges);
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text, GraphFormat format) {
  return format == GraphFormat::json ? parse_json(text) : parse_csv(text);
}

std::string serialize(const DirectedGraph& g, GraphFormat format) {
  if (format == GraphFormat::json) {
    nlohmann::json doc;
    doc["nodes"] = g.labels();
    auto edges = nlohmann::json::array();
    for (const auto& [s, t] : g.edges()) edges.push_back({g.label(s), g.label(t)});
    doc["edges"] = std::move(edges);
    return doc.dump() + "\n";
  }

  for (const auto& label : g.labels()) {
    if (label.find_first_of(",\r\n") != std::string::npos || label != trim(label) ||
        label.front() == '#')
      throw std::invalid_argument("label '" + label + "' cannot be written as CSV");
  }
  std::ostringstream out;
  out << "source,target\n";
  for (NodeIndex v = 0; v < g.node_count(); ++v)
    if (g.in_degree(v) == 0 && g.out_degree(v) == 0) out << kNodeDirective << g.label(v) << '\n';
  for (const auto& [s, t] : g.edges()) out << g.label(s) << ',' << g.label(t) << '\n';
  return out.str();
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".json" ? GraphFormat::json : GraphFormat::csv;
}

ParsedGraph read_graph_file(const std::filesystem::path& path) {
  return read_graph_file(path, format_for_path(path));
}

ParsedGraph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str(), format);
}

}  // namespace netcover
