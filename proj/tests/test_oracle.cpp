#include <doctest.h>

#include "oracle.hpp"
#include "test_support.hpp"

using namespace netcover;

TEST_CASE("brute-force maximum coverage") {
  SUBCASE("star, k=1") {
    const auto g = testing::in_star(4);
    const auto best = oracle::brute_force_max_coverage(g, 1);
    CHECK(best.nodes == std::vector<NodeIndex>{g.index_of("hub")});
    CHECK(best.fraction == 1.0);
  }
  SUBCASE("edgeless, k=2 picks the lexicographically first pair") {
    const auto g = testing::edgeless({"a", "b", "c", "d"});
    const auto best = oracle::brute_force_max_coverage(g, 2);
    CHECK(best.nodes == std::vector<NodeIndex>{0, 1});
    CHECK(best.fraction == 0.5);
  }
  SUBCASE("two hubs, k=2") {
    const auto g = DirectedGraph::from_labels({"z"}, {{"a", "h1"}, {"b", "h1"}, {"b", "h2"}, {"c", "h2"}});
    const auto best = oracle::brute_force_max_coverage(g, 2);
    CHECK(best.nodes == std::vector<NodeIndex>{g.index_of("h1"), g.index_of("h2")});
    CHECK(best.fraction == doctest::Approx(5.0 / 6.0));
  }
  SUBCASE("refuses huge instances") {
    const auto g = synth::gen_erdos_renyi(60, 0.1, 1);
    CHECK_THROWS_WITH_AS(oracle::brute_force_max_coverage(g, 10), doctest::Contains("10^7"), std::length_error);
  }
}

TEST_CASE("naive greedy examples") {
  const auto g = testing::edgeless({"a", "b", "c", "d"});
  const auto r = oracle::naive_greedy(g, 0.5);
  CHECK(r.picks == std::vector<NodeIndex>{0, 1});
  CHECK(r.cumulative == std::vector<double>{0.25, 0.5});
  const auto star = testing::in_star(4);
  CHECK(oracle::naive_greedy(star, 0.8).picks == std::vector<NodeIndex>{star.index_of("hub")});
}

TEST_CASE("definitional centrality") {
  SUBCASE("directed 4-cycle") {
    const auto g = testing::directed_cycle(4);
    for (double s : oracle::definitional_centrality(g, Measure::betweenness).scores) CHECK(s == 3.0);
    // Distances 1, 2, 3 from every node: 3/6.
    for (double s : oracle::definitional_centrality(g, Measure::closeness).scores) CHECK(s == 0.5);
    for (double s : oracle::definitional_centrality(g, Measure::eigenvector).scores) CHECK(s == doctest::Approx(0.5));
  }
  SUBCASE("refuses more than 50 nodes") {
    CHECK_THROWS_AS(oracle::definitional_centrality(synth::gen_erdos_renyi(51, 0.1, 1), Measure::betweenness),
                    std::length_error);
  }
}
