#include "netcover/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace netcover {

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string percent(double fraction, int decimals = 0) { return fixed(fraction * 100.0, decimals) + "%"; }

// ".921" style used for correlation coefficients.
std::string coefficient(double rho) {
  auto text = fixed(rho, 3);
  if (text.starts_with("0.")) text.erase(0, 1);
  if (text.starts_with("-0.")) text.erase(1, 1);
  return text;
}

std::string column_title(Method method) {
  switch (method) {
    case Method::in_degree:
      return "in-degree rank";
    case Method::betweenness:
      return "betweenness rank";
    case Method::closeness:
      return "closeness rank";
    case Method::eigenvector:
      return "eigenvector rank";
    case Method::greedy:
      return "greedy coverage";
  }
  return std::string(to_string(method));
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "markdown" || name == "md") return OutputFormat::markdown;
  return std::nullopt;
}

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::logic_error("double formatting failed");
  return std::string(buf, end);
}

std::string render_stats(const GraphStats& stats, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return "n,m,density,avg_degree\n" + std::to_string(stats.n) + "," + std::to_string(stats.m) + "," +
             format_double(stats.density) + "," + format_double(stats.avg_degree) + "\n";
    case OutputFormat::json:
      return dump({{"n", stats.n}, {"m", stats.m}, {"density", stats.density}, {"avg_degree", stats.avg_degree}});
    case OutputFormat::markdown:
      break;
  }
  return "n=" + std::to_string(stats.n) + " m=" + std::to_string(stats.m) + " density=" + percent(stats.density, 1) +
         " avg_degree=" + fixed(stats.avg_degree, 2) + "\n";
}

std::string render_selection(const DirectedGraph& g, const SelectionResult& result, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::csv:
      out << "rank,node,covered,coverage\n";
      for (std::size_t i = 0; i < result.picks.size(); ++i)
        out << i + 1 << ',' << g.label(result.picks[i]) << ',' << result.covered[i] << ','
            << format_double(result.cumulative[i]) << '\n';
      return out.str();
    case OutputFormat::json: {
      auto picks = nlohmann::json::array();
      for (std::size_t i = 0; i < result.picks.size(); ++i)
        picks.push_back({{"rank", i + 1},
                         {"node", g.label(result.picks[i])},
                         {"covered", result.covered[i]},
                         {"coverage", result.cumulative[i]}});
      return dump({{"method", to_string(result.method)},
                   {"n", g.node_count()},
                   {"target", result.target},
                   {"picks", std::move(picks)}});
    }
    case OutputFormat::markdown:
      break;
  }
  out << "| # | node | coverage |\n|---|---|---|\n";
  for (std::size_t i = 0; i < result.picks.size(); ++i)
    out << "| " << i + 1 << " | " << g.label(result.picks[i]) << " | " << percent(result.cumulative[i]) << " |\n";
  return out.str();
}

std::string render_coverage_table(const CoverageTable& table, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::csv:
      out << 'k';
      for (auto m : table.methods) out << ',' << to_string(m);
      out << '\n';
      for (std::size_t i = 0; i < table.ks.size(); ++i) {
        out << table.ks[i];
        for (double cell : table.cells[i]) out << ',' << format_double(cell);
        out << '\n';
      }
      return out.str();
    case OutputFormat::json: {
      nlohmann::json coverage = nlohmann::json::object();
      for (std::size_t j = 0; j < table.methods.size(); ++j) {
        auto column = nlohmann::json::array();
        for (const auto& row : table.cells) column.push_back(row[j]);
        coverage[std::string(to_string(table.methods[j]))] = std::move(column);
      }
      return dump({{"ks", table.ks}, {"coverage", std::move(coverage)}});
    }
    case OutputFormat::markdown:
      break;
  }
  out << "| nodes selected |";
  for (auto m : table.methods) out << ' ' << column_title(m) << " |";
  out << "\n|---|";
  for (std::size_t j = 0; j < table.methods.size(); ++j) out << "---|";
  out << '\n';
  for (std::size_t i = 0; i < table.ks.size(); ++i) {
    out << "| " << table.ks[i] << " |";
    for (double cell : table.cells[i]) out << ' ' << percent(cell) << " |";
    out << '\n';
  }
  return out.str();
}

std::string render_correlation(const RankCorrelationMatrix& matrix, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::csv:
      out << "method,rho\n";
      for (const auto& [m, rho] : matrix.entries) out << to_string(m) << ',' << (rho ? format_double(*rho) : "") << '\n';
      return out.str();
    case OutputFormat::json: {
      nlohmann::json doc = nlohmann::json::object();
      for (const auto& [m, rho] : matrix.entries)
        doc[std::string(to_string(m))] = rho ? nlohmann::json(*rho) : nlohmann::json(nullptr);
      return dump(doc);
    }
    case OutputFormat::markdown:
      break;
  }
  out << "| |";
  for (const auto& entry : matrix.entries) out << ' ' << to_string(entry.first) << " centrality |";
  out << "\n|---|";
  for (std::size_t j = 0; j < matrix.entries.size(); ++j) out << "---|";
  out << "\n| " << to_string(matrix.reference) << " coverage rank |";
  for (const auto& entry : matrix.entries) out << ' ' << (entry.second ? coefficient(*entry.second) : "n/a") << " |";
  out << '\n';
  return out.str();
}

std::string render_pareto(const ParetoPoint& point, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return "method,threshold,k,n,node_fraction,coverage\n" + std::string(to_string(point.method)) + "," +
             format_double(point.threshold) + "," + std::to_string(point.k) + "," + std::to_string(point.n) + "," +
             format_double(point.node_fraction) + "," + format_double(point.coverage) + "\n";
    case OutputFormat::json:
      return dump({{"method", to_string(point.method)},
                   {"threshold", point.threshold},
                   {"k", point.k},
                   {"n", point.n},
                   {"node_fraction", point.node_fraction},
                   {"coverage", point.coverage}});
    case OutputFormat::markdown:
      break;
  }
  return "method=" + std::string(to_string(point.method)) + " threshold=" + percent(point.threshold) +
         " k=" + std::to_string(point.k) + " n=" + std::to_string(point.n) +
         " node_fraction=" + percent(point.node_fraction, 1) + " coverage=" + percent(point.coverage, 1) + "\n";
}

}  // namespace netcover
