#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "netcover/coverage.hpp"
#include "netcover/evaluation.hpp"
#include "netcover/graph.hpp"

namespace netcover {

/// markdown renders percentages as in the comparison tables (whole
/// percent, rho to three decimals); csv and json carry full precision with
/// fixed column and key order. Undefined rho values render as "n/a" in
/// markdown, an empty csv field, and null in json.
enum class OutputFormat { csv, json, markdown };

std::optional<OutputFormat> parse_output_format(std::string_view name);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

std::string render_stats(const GraphStats& stats, OutputFormat format);
std::string render_selection(const DirectedGraph& g, const SelectionResult& result, OutputFormat format);
std::string render_coverage_table(const CoverageTable& table, OutputFormat format);
std::string render_correlation(const RankCorrelationMatrix& matrix, OutputFormat format);
std::string render_pareto(const ParetoPoint& point, OutputFormat format);

}  // namespace netcover
