#include <doctest.h>

#include <json.hpp>

#include "netcover/report.hpp"
#include "test_support.hpp"

using namespace netcover;

TEST_CASE("output format names") {
  CHECK(parse_output_format("csv") == OutputFormat::csv);
  CHECK(parse_output_format("json") == OutputFormat::json);
  CHECK(parse_output_format("markdown") == OutputFormat::markdown);
  CHECK_FALSE(parse_output_format("xml").has_value());
}

TEST_CASE("format_double round-trips") {
  CHECK(format_double(0.8) == "0.8");
  CHECK(format_double(1.0) == "1");
  CHECK(std::stod(format_double(2.0 / 3.0)) == 2.0 / 3.0);
}

TEST_CASE("stats rendering") {
  GraphStats office{215, 2225, 2225.0 / (215.0 * 214.0), 4450.0 / 215.0};
  CHECK(render_stats(office, OutputFormat::markdown) == "n=215 m=2225 density=4.8% avg_degree=20.70\n");
  GraphStats pair{2, 1, 0.5, 1.0};
  CHECK(render_stats(pair, OutputFormat::markdown) == "n=2 m=1 density=50.0% avg_degree=1.00\n");
  CHECK(render_stats(pair, OutputFormat::csv) == "n,m,density,avg_degree\n2,1,0.5,1\n");
  const auto doc = nlohmann::json::parse(render_stats(pair, OutputFormat::json));
  CHECK(doc["density"] == 0.5);
  CHECK(doc["m"] == 1);
}

TEST_CASE("selection rendering") {
  const auto g = testing::edgeless({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"});
  const auto r = truncate(greedy_select(g, 1.0), 3);
  CHECK(render_selection(g, r, OutputFormat::markdown) ==
        "| # | node | coverage |\n|---|---|---|\n| 1 | a | 10% |\n| 2 | b | 20% |\n| 3 | c | 30% |\n");
  CHECK(render_selection(g, r, OutputFormat::csv) == "rank,node,covered,coverage\n1,a,1,0.1\n2,b,2,0.2\n3,c,3,0.3\n");
  const auto doc = nlohmann::json::parse(render_selection(g, r, OutputFormat::json));
  CHECK(doc["method"] == "greedy");
  CHECK(doc["picks"].size() == 3);
  CHECK(doc["picks"][2]["node"] == "c");
}

TEST_CASE("coverage table rendering") {
  CoverageTable t;
  t.ks = {1, 2};
  t.methods = {Method::in_degree, Method::greedy};
  t.cells = {{0.17, 0.171}, {0.22, 0.28}};
  CHECK(render_coverage_table(t, OutputFormat::markdown) ==
        "| nodes selected | in-degree rank | greedy coverage |\n|---|---|---|\n| 1 | 17% | 17% |\n| 2 | 22% | 28% |\n");
  CHECK(render_coverage_table(t, OutputFormat::csv) == "k,in_degree,greedy\n1,0.17,0.171\n2,0.22,0.28\n");
  const auto doc = nlohmann::json::parse(render_coverage_table(t, OutputFormat::json));
  CHECK(doc["ks"] == nlohmann::json::array({1, 2}));
  CHECK(doc["coverage"]["greedy"][1] == 0.28);
}

TEST_CASE("correlation rendering") {
  RankCorrelationMatrix m;
  m.entries = {{Method::in_degree, 0.921}, {Method::betweenness, 0.834}, {Method::closeness, -0.5},
               {Method::eigenvector, 1.0}};
  CHECK(render_correlation(m, OutputFormat::markdown) ==
        "| | in_degree centrality | betweenness centrality | closeness centrality | eigenvector centrality |\n"
        "|---|---|---|---|---|\n"
        "| greedy coverage rank | .921 | .834 | -.500 | 1.000 |\n");
  const auto doc = nlohmann::json::parse(render_correlation(m, OutputFormat::json));
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"betweenness", "closeness", "eigenvector", "in_degree"});

  m.entries[1].second.reset();
  CHECK(render_correlation(m, OutputFormat::csv) == "method,rho\nin_degree,0.921\nbetweenness,\ncloseness,-0.5\neigenvector,1\n");
  CHECK(nlohmann::json::parse(render_correlation(m, OutputFormat::json))["betweenness"].is_null());
  CHECK(render_correlation(m, OutputFormat::markdown).find("| n/a |") != std::string::npos);
}

TEST_CASE("pareto rendering") {
  ParetoPoint p{Method::greedy, 50, 215, 50.0 / 215.0, 0.83, 0.8};
  CHECK(render_pareto(p, OutputFormat::markdown) ==
        "method=greedy threshold=80% k=50 n=215 node_fraction=23.3% coverage=83.0%\n");
}
