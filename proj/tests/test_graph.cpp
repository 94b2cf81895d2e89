#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "advncg/error.hpp"
#include "advncg/graph.hpp"
#include "advncg/structure.hpp"
#include "oracles.hpp"

#include <random>
#include <sstream>

using namespace advncg;

namespace {

StrategyVector sv(std::vector<std::vector<NodeId>> agents) {
    StrategyVector s;
    s.agents = std::move(agents);
    return s;
}

} // namespace

TEST_CASE("build_from_strategies round trips") {
    // empty strategies
    OwnedMultiGraph g0 = build_from_strategies(2, sv({{}, {}}), 2);
    CHECK(g0.edge_count() == 0);

    // doubled clique on 3 agents: everyone owns an edge to both others
    OwnedMultiGraph dg3 = build_from_strategies(3, sv({{1, 2}, {0, 2}, {0, 1}}), 2);
    CHECK(dg3.edge_count() == 6);
    for (NodeId u = 0; u < 3; ++u) CHECK(dg3.strategy_size(u) == 2);
    CHECK(dg3.multiplicity(0, 1) == 2);
    CHECK(strategies_of(dg3) == sv({{1, 2}, {0, 2}, {0, 1}}));

    // cap violation: multiplicity 3 on pair {0,1} with cap 2
    CHECK_THROWS_AS(build_from_strategies(2, sv({{1, 1}, {0}}), 2), Error);
    // invalid targets
    CHECK_THROWS_AS(build_from_strategies(2, sv({{0}, {}}), 2), Error);
    CHECK_THROWS_AS(build_from_strategies(2, sv({{5}, {}}), 2), Error);
}

TEST_CASE("round trip over random strategy vectors") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> nd(1, 6), capd(1, 3);
    for (int trial = 0; trial < 300; ++trial) {
        int n = nd(rng), cap = capd(rng);
        // build a cap-respecting random strategy vector
        std::vector<std::vector<int>> toward(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
        StrategyVector s;
        s.agents.assign(static_cast<size_t>(n), {});
        std::uniform_int_distribution<int> cnt(0, cap);
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = u + 1; v < n; ++v) {
                int total = cnt(rng);
                std::uniform_int_distribution<int> split(0, total);
                int mine = split(rng);
                for (int i = 0; i < mine; ++i) s.agents[static_cast<size_t>(u)].push_back(v);
                for (int i = 0; i < total - mine; ++i) s.agents[static_cast<size_t>(v)].push_back(u);
            }
        }
        for (auto& a : s.agents) std::sort(a.begin(), a.end());
        OwnedMultiGraph g = build_from_strategies(n, s, cap);
        CHECK(strategies_of(g) == s);
        CHECK(g.edge_count() == [&] {
            int t = 0;
            for (const auto& a : s.agents) t += static_cast<int>(a.size());
            return t;
        }());
    }
}

TEST_CASE("graph_distance") {
    OwnedMultiGraph c4 = build_from_strategies(4, sv({{1}, {2}, {3}, {0}}), 2);
    CHECK(graph_distance(c4, 0, 2) == ExtCost(2));
    CHECK(graph_distance(c4, 0, 0) == ExtCost(0));

    OwnedMultiGraph dg3 = build_from_strategies(3, sv({{1, 2}, {0, 2}, {0, 1}}), 2);
    CHECK(graph_distance(dg3, 0, 1) == ExtCost(1));
    CHECK(graph_distance(dg3, 1, 2) == ExtCost(1));

    OwnedMultiGraph iso = build_from_strategies(2, sv({{}, {}}), 2);
    CHECK(graph_distance(iso, 0, 1).is_infinite());
    CHECK_THROWS_AS(graph_distance(iso, 0, 7), Error);
}

TEST_CASE("two-edge-connectivity") {
    OwnedMultiGraph c4 = build_from_strategies(4, sv({{1}, {2}, {3}, {0}}), 2);
    CHECK(is_two_edge_connected(c4));

    OwnedMultiGraph path = build_from_strategies(3, sv({{1}, {2}, {}}), 2);
    CHECK_FALSE(is_two_edge_connected(path));

    OwnedMultiGraph ds4 =
        build_from_strategies(4, sv({{1, 1, 2, 2, 3, 3}, {}, {}, {}}), 2);
    CHECK(is_two_edge_connected(ds4));

    // parallel pair alone on two nodes
    OwnedMultiGraph pp = build_from_strategies(2, sv({{1, 1}, {}}), 2);
    CHECK(is_two_edge_connected(pp));
    OwnedMultiGraph single = build_from_strategies(2, sv({{1}, {}}), 2);
    CHECK_FALSE(is_two_edge_connected(single));
}

TEST_CASE("two-edge-connectivity agrees with bridges + connectivity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        std::uniform_int_distribution<int> nd(2, 7);
        OwnedMultiGraph g = oracle::random_graph(rng, nd(rng), 2);
        bool expected = is_connected(g) && bridges(g).empty();
        CHECK(is_two_edge_connected(g) == expected);
    }
}

TEST_CASE("distance is a metric on connected graphs") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> nd(2, 8);
        OwnedMultiGraph g = oracle::random_graph(rng, nd(rng), 2, 0.8);
        if (!is_connected(g)) continue;
        int n = g.node_count();
        std::vector<std::vector<int>> d;
        for (NodeId u = 0; u < n; ++u) d.push_back(hop_distances(g, u));
        for (NodeId u = 0; u < n; ++u) {
            CHECK(d[u][u] == 0);
            for (NodeId v = 0; v < n; ++v) {
                CHECK(d[u][v] == d[v][u]);
                for (NodeId w = 0; w < n; ++w) CHECK(d[u][w] <= d[u][v] + d[v][w]);
            }
        }
    }
}

TEST_CASE("canonical keys") {
    OwnedMultiGraph a = OwnedMultiGraph::from_edges(3, {{0, 1, 0}, {1, 2, 1}}, 2);
    OwnedMultiGraph b = OwnedMultiGraph::from_edges(3, {{2, 1, 1}, {1, 0, 0}}, 2);
    CHECK(canonical_key(a) == canonical_key(b));  // edge order and endpoint order

    OwnedMultiGraph owner0 = OwnedMultiGraph::from_edges(2, {{0, 1, 0}}, 2);
    OwnedMultiGraph owner1 = OwnedMultiGraph::from_edges(2, {{0, 1, 1}}, 2);
    CHECK(canonical_key(owner0) != canonical_key(owner1));

    OwnedMultiGraph dg3 = build_from_strategies(3, sv({{1, 2}, {0, 2}, {0, 1}}), 2);
    OwnedMultiGraph dg3_minus = OwnedMultiGraph::from_edges(
        3, {{0, 1, 0}, {0, 2, 0}, {0, 2, 2}, {1, 2, 1}, {1, 2, 2}}, 2);
    CHECK(canonical_key(dg3) != canonical_key(dg3_minus));
    CHECK(canonical_key_hash(a) == canonical_key_hash(b));
}

TEST_CASE("graph text format") {
    std::string text =
        "advncg-graph v1\n"
        "n 3            # three agents\n"
        "# full comment line\n"
        "e 0 1 0\n"
        "e 0 1 1\n"
        "e 1 2 1\n";
    OwnedMultiGraph g = parse_graph_string(text, 2);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.multiplicity(0, 1) == 2);

    // write/parse round trip preserves the state exactly
    OwnedMultiGraph g2 = parse_graph_string(graph_to_string(g), 2);
    CHECK(canonical_key(g) == canonical_key(g2));

    auto line_of = [](const std::string& bad) {
        try {
            parse_graph_string(bad, 2);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Parse);
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("advncg-graph v2\nn 2\n") == 1);
    CHECK(line_of("advncg-graph v1\nm 2\n") == 2);
    CHECK(line_of("advncg-graph v1\nn 2\ne 0 1\n") == 3);          // missing owner
    CHECK(line_of("advncg-graph v1\nn 2\ne 0 1 2\n") == 3);        // owner not an endpoint
    CHECK(line_of("advncg-graph v1\nn 2\ne 0 0 0\n") == 3);        // self-loop
    CHECK(line_of("advncg-graph v1\nn 2\ne 0 1 0 9\n") == 3);      // trailing token
    CHECK_THROWS_AS(parse_graph_string("", 2), Error);
    // duplicate e-lines beyond the cap
    CHECK_THROWS_AS(parse_graph_string("advncg-graph v1\nn 2\ne 0 1 0\ne 0 1 0\ne 0 1 1\n", 2), Error);
}
