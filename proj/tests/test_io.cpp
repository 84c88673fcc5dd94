#include <doctest.h>

#include <random>

#include "netcover/io.hpp"
#include "test_support.hpp"

using namespace netcover;

TEST_CASE("csv edge lists") {
  SUBCASE("plain rows") {
    const auto parsed = parse_edge_list("a,b\nb,c", GraphFormat::csv);
    CHECK(parsed.graph.node_count() == 3);
    CHECK(parsed.graph.edge_count() == 2);
    CHECK(parsed.warnings.empty());
  }
  SUBCASE("duplicates and self-loops are dropped and counted") {
    const auto parsed = parse_edge_list("a,b\na,b\na,a", GraphFormat::csv);
    CHECK(parsed.graph.node_count() == 2);
    CHECK(parsed.graph.edge_count() == 1);
    CHECK(parsed.warnings.duplicates == 1);
    CHECK(parsed.warnings.self_loops == 1);
  }
  SUBCASE("header, third column, CRLF and blank lines") {
    const auto parsed = parse_edge_list("source,target,weight\r\n\r\n x , y ,3\r\ny,z,1\r\n", GraphFormat::csv);
    CHECK(parsed.graph.labels() == std::vector<std::string>{"x", "y", "z"});
    CHECK(parsed.graph.edge_count() == 2);
  }
  SUBCASE("a first row not starting with 'source' is data") {
    const auto parsed = parse_edge_list("src,dst\n", GraphFormat::csv);
    CHECK(parsed.graph.edge_count() == 1);
  }
  SUBCASE("comments and node directives") {
    const auto parsed = parse_edge_list("# collaboration survey\n#node,loner\na,b\n", GraphFormat::csv);
    CHECK(parsed.graph.node_count() == 3);
    CHECK(parsed.graph.find("loner").has_value());
  }
}

TEST_CASE("csv errors carry line numbers") {
  auto line_of = [](std::string_view text) {
    try {
      (void)parse_edge_list(text, GraphFormat::csv);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{9999};
  };
  CHECK(line_of("a,b\nc\n") == 2);
  CHECK(line_of("a,b\n\nc,d,e,f\n") == 3);
  CHECK(line_of("a,b\n,d\n") == 2);
  CHECK(line_of("a,\n") == 1);
  CHECK(line_of("#node,\n") == 1);
}

TEST_CASE("empty input is rejected") {
  CHECK_THROWS_WITH_AS(parse_edge_list("", GraphFormat::csv), "empty graph", ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("source,target\n\n", GraphFormat::csv), "empty graph", ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("  ", GraphFormat::json), "empty graph", ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list(R"({"edges": []})", GraphFormat::json), "empty graph", ParseError);
}

TEST_CASE("json documents") {
  SUBCASE("isolated nodes are retained") {
    const auto parsed = parse_edge_list(R"({"nodes": ["a", "b", "c"], "edges": [["a", "b"]]})", GraphFormat::json);
    CHECK(parsed.graph.node_count() == 3);
    CHECK(in_neighbors(parsed.graph, "b") == std::vector<std::string>{"a"});
  }
  SUBCASE("integer labels become decimal text") {
    const auto parsed = parse_edge_list(R"({"edges": [[1, 2], [2, 3]]})", GraphFormat::json);
    CHECK(parsed.graph.labels() == std::vector<std::string>{"1", "2", "3"});
  }
  SUBCASE("malformed documents") {
    CHECK_THROWS_AS(parse_edge_list("{", GraphFormat::json), ParseError);
    CHECK_THROWS_AS(parse_edge_list("[]", GraphFormat::json), ParseError);
    CHECK_THROWS_AS(parse_edge_list(R"({"nodes": []})", GraphFormat::json), ParseError);
    CHECK_THROWS_AS(parse_edge_list(R"({"edges": [["a"]]})", GraphFormat::json), ParseError);
    CHECK_THROWS_AS(parse_edge_list(R"({"edges": [["a", ""]]})", GraphFormat::json), ParseError);
    CHECK_THROWS_AS(parse_edge_list(R"({"edges": [["a", 1.5]]})", GraphFormat::json), ParseError);
  }
}

TEST_CASE("serialization is sorted and stable") {
  const auto g = parse_edge_list("c,a\nb,a\na,c\n#node,d\n", GraphFormat::csv).graph;
  CHECK(serialize(g, GraphFormat::csv) == "source,target\n#node,d\na,c\nb,a\nc,a\n");
  CHECK(serialize(g, GraphFormat::json) ==
        R"({"edges":[["a","c"],["b","a"],["c","a"]],"nodes":["a","b","c","d"]})"
        "\n");
  CHECK_THROWS_AS(serialize(DirectedGraph::from_labels({}, {{"x,y", "z"}}), GraphFormat::csv), std::invalid_argument);
}

TEST_CASE("property: parse(serialize(g)) == g for both formats") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = testing::random_graph(rng, 50);
    for (auto format : {GraphFormat::csv, GraphFormat::json}) {
      const auto back = parse_edge_list(serialize(g, format), format);
      CHECK(back.graph == g);
      CHECK(back.warnings.empty());
    }
  }
}

TEST_CASE("file helpers") {
  CHECK(format_for_path("net.JSON") == GraphFormat::json);
  CHECK(format_for_path("net.csv") == GraphFormat::csv);
  CHECK(format_for_path("edges.txt") == GraphFormat::csv);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.csv"), std::runtime_error);
}
