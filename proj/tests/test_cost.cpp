#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "advncg/cost.hpp"
#include "advncg/families.hpp"
#include "advncg/graph.hpp"
#include "oracles.hpp"

#include <random>

using namespace advncg;

namespace {

OwnedMultiGraph cycle4() {
    return build_family({FamilyKind::Cycle, 4, 0});
}

OwnedMultiGraph dg3() {
    return build_family({FamilyKind::DoubledClique, 3, 0});
}

GameConfig cfg_adv(const Rational& alpha) {
    GameConfig c;
    c.alpha = alpha;
    return c;
}

} // namespace

TEST_CASE("delta_sum") {
    CHECK(delta_sum(cycle4(), 0) == ExtCost(4));  // 1 + 2 + 1

    OwnedMultiGraph ds3 = build_family({FamilyKind::DoubledStar, 3, 0});
    CHECK(delta_sum(ds3, 1) == ExtCost(3));  // 2n-3 at n=3

    OwnedMultiGraph iso = OwnedMultiGraph::empty(2);
    CHECK(delta_sum(iso, 0).is_infinite());
}

TEST_CASE("expected distance cost on the canonical examples") {
    // doubled clique: every deletion leaves all distances 1
    CHECK(expected_distance_cost(dg3(), 0) == ExtCost(2));

    // one instance of pair {0,1} removed: n-1 + k/(n(n-1)-k) at n=3, k=1
    OwnedMultiGraph dg3_minus = OwnedMultiGraph::from_edges(
        3, {{0, 1, 1}, {0, 2, 0}, {0, 2, 2}, {1, 2, 1}, {1, 2, 2}}, 2);
    CHECK(expected_distance_cost(dg3_minus, 0) == ExtCost::ratio(11, 5));

    // C_4: brute force over the 4 deletions gives (6+4+4+6)/4
    CHECK(expected_distance_cost(cycle4(), 0) == ExtCost(5));

    // doubled star plus one leaf-leaf edge: 2n-3 - k + k/(2(n-1)+k)
    OwnedMultiGraph ds3_plus = OwnedMultiGraph::from_edges(
        3, {{0, 1, 0}, {0, 1, 0}, {0, 2, 0}, {0, 2, 0}, {1, 2, 1}}, 2);
    CHECK(expected_distance_cost(ds3_plus, 1) == ExtCost::ratio(11, 5));

    // a bridge deletion disconnects
    OwnedMultiGraph path = OwnedMultiGraph::from_edges(3, {{0, 1, 0}, {1, 2, 2}}, 2);
    CHECK(expected_distance_cost(path, 0).is_infinite());

    // conventions
    CHECK(expected_distance_cost(OwnedMultiGraph::empty(1), 0) == ExtCost(0));
    CHECK(expected_distance_cost(OwnedMultiGraph::empty(2), 0).is_infinite());
}

TEST_CASE("agent cost per model") {
    // leaf owning both of its parallel edges
    OwnedMultiGraph ds3 = OwnedMultiGraph::from_edges(
        3, {{0, 1, 1}, {0, 1, 1}, {0, 2, 0}, {0, 2, 2}}, 2);
    GameConfig adv = cfg_adv(1);
    CHECK(agent_cost(ds3, adv, 1) == ExtCost(5));  // 2 + 3
    CHECK(agent_cost(ds3, adv, 1) == oracle::naive_agent_cost(ds3, adv, 1));

    GameConfig kli = cfg_adv(1);
    kli.model = CostModel::Kliemann;
    CHECK(agent_cost(dg3(), kli, 0) == ExtCost(2));  // 2-edge-connected: pure edge cost

    GameConfig ncg = cfg_adv(2);
    ncg.model = CostModel::Ncg;
    CHECK(agent_cost(cycle4(), ncg, 0) == ExtCost(6));  // 2 + 4
}

TEST_CASE("social cost") {
    CHECK(social_cost(dg3(), cfg_adv(1)) == ExtCost(12));  // 6a + 6

    OwnedMultiGraph dg31 = build_family({FamilyKind::PartialDoubledClique, 3, 1});
    CHECK(social_cost(dg31, cfg_adv(1)) == ExtCost(11));  // 4a + 7
    CHECK(social_cost(dg31, cfg_adv(Rational(1, 2))) == ExtCost(9));

    CHECK(social_cost(cycle4(), cfg_adv(1)) == ExtCost(24));  // 4a + 20
}

TEST_CASE("ownership invariance of distance terms") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> nd(2, 6);
    for (int trial = 0; trial < 120; ++trial) {
        OwnedMultiGraph g = oracle::random_graph(rng, nd(rng), 2);
        // flip every owner to the other endpoint
        std::vector<OwnedEdge> flipped;
        for (const auto& e : g.edges()) flipped.push_back({e.u, e.v, e.owner == e.u ? e.v : e.u});
        OwnedMultiGraph g2 = OwnedMultiGraph::from_edges(g.node_count(), flipped, 2);
        GameConfig cfg = cfg_adv(Rational(7, 3));
        CHECK(social_cost(g, cfg) == social_cost(g2, cfg));
        for (NodeId u = 0; u < g.node_count(); ++u)
            CHECK(expected_distance_cost(g, u) == expected_distance_cost(g2, u));
    }
}

TEST_CASE("fully doubled graphs feel no deletions") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> nd(2, 6);
    for (int trial = 0; trial < 120; ++trial) {
        int n = nd(rng);
        // random support, then double every present pair
        OwnedMultiGraph base = oracle::random_graph(rng, n, 1);
        std::vector<OwnedEdge> doubled;
        for (const auto& e : base.edges()) {
            doubled.push_back(e);
            doubled.push_back({e.u, e.v, e.owner == e.u ? e.v : e.u});
        }
        OwnedMultiGraph g = OwnedMultiGraph::from_edges(n, doubled, 2);
        if (g.edge_count() == 0) continue;
        for (NodeId u = 0; u < n; ++u)
            CHECK(expected_distance_cost(g, u) == delta_sum(g, u));
    }
}

TEST_CASE("adversarial distance dominates the plain sum") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> nd(2, 7);
    for (int trial = 0; trial < 200; ++trial) {
        OwnedMultiGraph g = oracle::random_graph(rng, nd(rng), 3);
        if (g.edge_count() == 0) continue;
        for (NodeId u = 0; u < g.node_count(); ++u)
            CHECK(expected_distance_cost(g, u) >= delta_sum(g, u));
    }
}

TEST_CASE("finiteness iff two-edge-connected") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> nd(2, 7);
    for (int trial = 0; trial < 200; ++trial) {
        OwnedMultiGraph g = oracle::random_graph(rng, nd(rng), 2);
        bool all_finite = true;
        for (NodeId u = 0; u < g.node_count(); ++u)
            all_finite = all_finite && expected_distance_cost(g, u).is_finite();
        CHECK(all_finite == (is_two_edge_connected(g) && g.edge_count() > 0));
    }
}

TEST_CASE("optimized cost equals the all-deletions oracle") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> nd(1, 7), capd(1, 3);
    for (int trial = 0; trial < 150; ++trial) {
        OwnedMultiGraph g = oracle::random_graph(rng, nd(rng), capd(rng));
        GameConfig cfg = cfg_adv(Rational(103, 10));
        CHECK(social_cost(g, cfg) == oracle::naive_social_cost(g, cfg));
        for (NodeId u = 0; u < g.node_count(); ++u) {
            CHECK(expected_distance_cost(g, u) == oracle::naive_expected_distance_cost(g, u));
            CHECK(expected_unreachable(g, u) == oracle::naive_expected_unreachable(g, u));
        }
    }
}
