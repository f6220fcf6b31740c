#include <doctest.h>

#include "oracles.hpp"
#include "suncat/graph_io.hpp"

using namespace suncat;

TEST_CASE("graph6 encodes known values") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(to_graph6(k3) == "Bw");
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(to_graph6(p3) == "Bg");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 round trips with identical labeling") {
    oracle::Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracle::random_graph(rng.range(0, 14), rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    // long form beyond 62 vertices
    Graph big(70);
    for (int i = 0; i + 1 < 70; ++i) big.add_edge(i, i + 1);
    std::string enc = to_graph6(big);
    CHECK(static_cast<unsigned char>(enc[0]) == 126);
    CHECK(from_graph6(enc) == big);
}

TEST_CASE("graph6 parser accepts the optional header and rejects junk") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(from_graph6(">>graph6<<Bg") == p3);
    CHECK(from_graph6("Bg\n") == p3);
    CHECK_THROWS_AS(from_graph6("B"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("Bgg"), std::invalid_argument);
}

TEST_CASE("json edge-list form") {
    Graph g = Graph::from_edges(4, {{2, 3}, {0, 1}});
    auto j = graph_to_json(g);
    CHECK(j["n"] == 4);
    CHECK(j["edges"].size() == 2);
    CHECK(j["edges"][0][0] == 0);
    CHECK(graph_from_json(j) == g);
}

TEST_CASE("dot output lists cycle vertices first") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    std::vector<int> cyc = {0, 1, 2};
    auto dot = to_dot(g, &cyc);
    CHECK(dot.find("graph {") == 0);
    CHECK(dot.find("0 -- 1") != std::string::npos);
}
