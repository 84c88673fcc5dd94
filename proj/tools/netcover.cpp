// netcover: high-coverage node selection and centrality baselines for
// directed networks.
//
// Exit codes: 0 success, 2 usage/input error, 3 internal invariant violation.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "netcover/centrality.hpp"
#include "netcover/coverage.hpp"
#include "netcover/evaluation.hpp"
#include "netcover/io.hpp"
#include "netcover/report.hpp"
#include "netcover/synth.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t thread_count() {
  const char* env = std::getenv("NETCOVER_THREADS");
  if (env == nullptr || *env == '\0') return std::max(1u, std::thread::hardware_concurrency());
  try {
    std::size_t used = 0;
    const auto value = std::stoul(env, &used);
    if (used != std::string(env).size() || value == 0) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("NETCOVER_THREADS must be a positive integer, got '") + env + "'");
  }
}

netcover::OutputFormat output_format(const std::string& name) {
  if (auto f = netcover::parse_output_format(name)) return *f;
  throw UsageError("unknown format '" + name + "' (expected csv, json or markdown)");
}

netcover::DirectedGraph load(const std::string& path) {
  auto parsed = netcover::read_graph_file(path);
  if (!parsed.warnings.empty())
    std::cerr << "warning: dropped " << parsed.warnings.duplicates << " duplicate edge(s) and "
              << parsed.warnings.self_loops << " self-loop(s)\n";
  return std::move(parsed.graph);
}

void report_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

netcover::Method method_named(const std::string& name) {
  if (auto m = netcover::parse_method(name)) return *m;
  throw UsageError("unknown method '" + name + "'");
}

struct GraphArgs {
  std::string path;
  std::string format = "markdown";
};

void add_graph_args(CLI::App* cmd, GraphArgs& args) {
  cmd->add_option("graph", args.path, "Edge list (.csv or .json)")->required();
  cmd->add_option("-f,--format", args.format, "Output format: csv, json or markdown")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Select high-coverage change agents in directed networks"};
  app.require_subcommand(1);

  GraphArgs stats_args;
  auto* stats = app.add_subcommand("stats", "Node/edge counts, density and average degree");
  add_graph_args(stats, stats_args);

  GraphArgs select_args;
  std::string select_method = "greedy";
  std::optional<double> select_target;
  std::optional<std::size_t> select_k;
  auto* select = app.add_subcommand("select", "Select nodes with one method");
  add_graph_args(select, select_args);
  select->add_option("-m,--method", select_method, "greedy, in_degree, betweenness, closeness or eigenvector")
      ->capture_default_str();
  auto* target_opt = select->add_option("-t,--target", select_target, "Coverage fraction to reach (default 0.8)");
  auto* k_opt = select->add_option("-k,--k", select_k, "Number of nodes to select");
  target_opt->excludes(k_opt);

  GraphArgs evaluate_args;
  std::vector<std::size_t> evaluate_ks;
  auto* evaluate = app.add_subcommand("evaluate", "Coverage of every method at each k");
  add_graph_args(evaluate, evaluate_args);
  evaluate->add_option("--ks", evaluate_ks, "Comma-separated selection sizes (default 1-5,10,20,...,50 up to n)")
      ->delimiter(',');

  GraphArgs correlate_args;
  auto* correlate = app.add_subcommand("correlate", "Spearman rho between the greedy order and each centrality");
  add_graph_args(correlate, correlate_args);

  GraphArgs pareto_args;
  std::string pareto_method = "greedy";
  double pareto_threshold = netcover::kDefaultTargetCoverage;
  auto* pareto = app.add_subcommand("pareto", "Smallest selection reaching a coverage threshold");
  add_graph_args(pareto, pareto_args);
  pareto->add_option("-m,--method", pareto_method, "Selection method")->capture_default_str();
  pareto->add_option("--threshold", pareto_threshold, "Coverage threshold")->capture_default_str();

  std::string gen_model;
  std::size_t gen_n = 0;
  std::optional<double> gen_p;
  std::optional<std::size_t> gen_epn;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  std::string gen_format = "csv";
  auto* gen = app.add_subcommand("gen", "Generate a seeded synthetic digraph");
  gen->add_option("--model", gen_model, "er (Erdos-Renyi) or pa (preferential attachment)")->required();
  gen->add_option("--n", gen_n, "Node count")->required();
  gen->add_option("--p", gen_p, "Edge probability (er)");
  gen->add_option("--epn", gen_epn, "Edges emitted per new node (pa)");
  gen->add_option("--seed", gen_seed, "PRNG seed")->capture_default_str();
  gen->add_option("-o,--out", gen_out, "Output file; format follows the extension");
  gen->add_option("-f,--format", gen_format, "Format for standard output: csv or json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    using namespace netcover;
    if (stats->parsed()) {
      const auto format = output_format(stats_args.format);
      std::cout << render_stats(graph_stats(load(stats_args.path)), format);
    } else if (select->parsed()) {
      const auto format = output_format(select_args.format);
      const auto method = method_named(select_method);
      const auto g = load(select_args.path);
      const auto threads = thread_count();
      if (select_k && (*select_k < 1 || *select_k > g.node_count()))
        throw UsageError("--k must be between 1 and " + std::to_string(g.node_count()));
      const double target = select_target.value_or(kDefaultTargetCoverage);
      SelectionResult result;
      if (method == Method::greedy) {
        result = select_k ? truncate(greedy_select(g, 1.0), *select_k) : greedy_select(g, target);
      } else {
        std::vector<std::string> warnings;
        const auto rank = method_rank(g, method, threads, &warnings);
        report_warnings(warnings);
        if (select_k) {
          result = centrality_rank_select(g, rank, *select_k, method);
        } else {
          if (!(target > 0.0 && target <= 1.0)) throw UsageError("--target must be in (0, 1]");
          // Shortest prefix of the rank reaching the target.
          result = centrality_rank_select(g, rank, g.node_count(), method);
          const auto& cum = result.cumulative;
          const auto hit = std::find_if(cum.begin(), cum.end(), [&](double c) { return c >= target; });
          const auto k = static_cast<std::size_t>(hit - cum.begin()) + 1;
          result = truncate(std::move(result), k);
          result.target = target;
        }
      }
      std::cout << render_selection(g, result, format);
    } else if (evaluate->parsed()) {
      const auto format = output_format(evaluate_args.format);
      const auto g = load(evaluate_args.path);
      const auto ks = evaluate_ks.empty() ? default_ks(g.node_count()) : evaluate_ks;
      const auto table = coverage_table(g, ks, thread_count());
      report_warnings(table.warnings);
      std::cout << render_coverage_table(table, format);
    } else if (correlate->parsed()) {
      const auto format = output_format(correlate_args.format);
      const auto report = rank_correlation_report(load(correlate_args.path), thread_count());
      report_warnings(report.warnings);
      std::cout << render_correlation(report, format);
    } else if (pareto->parsed()) {
      const auto format = output_format(pareto_args.format);
      const auto point = pareto_point(load(pareto_args.path), method_named(pareto_method), pareto_threshold,
                                      thread_count());
      std::cout << render_pareto(point, format);
    } else if (gen->parsed()) {
      DirectedGraph g;
      if (gen_model == "er" || gen_model == "erdos_renyi") {
        if (!gen_p) throw UsageError("--model er requires --p");
        g = synth::gen_erdos_renyi(gen_n, *gen_p, gen_seed);
      } else if (gen_model == "pa" || gen_model == "preferential_attachment") {
        if (!gen_epn) throw UsageError("--model pa requires --epn");
        g = synth::gen_preferential(gen_n, *gen_epn, gen_seed);
      } else {
        throw UsageError("unknown model '" + gen_model + "' (expected er or pa)");
      }
      if (gen_out.empty()) {
        if (gen_format != "csv" && gen_format != "json") throw UsageError("gen writes csv or json");
        std::cout << serialize(g, gen_format == "json" ? GraphFormat::json : GraphFormat::csv);
      } else {
        std::ofstream out(gen_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + gen_out + "'");
        out << serialize(g, format_for_path(gen_out));
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
