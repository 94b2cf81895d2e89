#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "advncg/error.hpp"
#include "advncg/hardness.hpp"

#include <random>

using namespace advncg;

namespace {

SimpleGraph cycle(int n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return SimpleGraph::from_edges(n, e);
}

SimpleGraph clique(int n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return SimpleGraph::from_edges(n, e);
}

SimpleGraph path(int n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return SimpleGraph::from_edges(n, e);
}

SimpleGraph star(int leaves) {  // K_{1,leaves}, hub 0
    std::vector<std::pair<NodeId, NodeId>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return SimpleGraph::from_edges(leaves + 1, e);
}

SimpleGraph random_connected(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    while (true) {
        SimpleGraph g = SimpleGraph::empty(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < 0.5) g.add_edge(u, v);
        if (g.connected()) return g;
    }
}

std::uint32_t mask_of(std::initializer_list<int> nodes) {
    std::uint32_t m = 0;
    for (int v : nodes) m |= 1u << v;
    return m;
}

} // namespace

TEST_CASE("k-dominating m-connected predicate") {
    SimpleGraph c4 = cycle(4);
    CHECK(is_k_dominating_m_connected(c4, mask_of({0, 1, 2}), 1, 2));
    CHECK_FALSE(is_k_dominating_m_connected(c4, mask_of({0, 2}), 1, 2));  // induced disconnected
    CHECK(is_k_dominating_m_connected(clique(4), mask_of({0, 1}), 1, 2));
    CHECK(is_k_dominating_m_connected(c4, mask_of({0}), 1, 1));  // single vertex is connected
    CHECK_FALSE(is_k_dominating_m_connected(c4, 0, 1, 1));

    // m = 2: the full cycle is 2-connected, a sub-path of it is not
    CHECK(is_k_dominating_m_connected(c4, mask_of({0, 1, 2, 3}), 2, 1));
    CHECK_FALSE(is_k_dominating_m_connected(c4, mask_of({0, 1, 2}), 2, 1));
    CHECK_FALSE(is_k_dominating_m_connected(clique(4), mask_of({0, 1}), 2, 2));  // needs >= 3 nodes

    CHECK_THROWS_AS(is_k_dominating_m_connected(c4, 1, 3, 1), Error);
    CHECK_THROWS_AS(is_k_dominating_m_connected(c4, 1, 1, 0), Error);
}

TEST_CASE("minimum 1,2-CDS by brute force") {
    CdsResult c4 = min_mk_cds_bruteforce(cycle(4), 1, 2);
    CHECK(c4.size == 3);
    CHECK(c4.nodes == std::vector<NodeId>{0, 1, 2});  // lexicographically least minimum

    CHECK(min_mk_cds_bruteforce(clique(4), 1, 2).size == 2);
    CHECK(min_mk_cds_bruteforce(star(3), 1, 2).size == 4);  // must take every vertex
    CHECK(min_mk_cds_bruteforce(clique(3), 1, 2).size == 2);
}

TEST_CASE("superset monotonicity of valid sets (m = 1)") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        SimpleGraph g = random_connected(rng, 6);
        CdsResult base = min_mk_cds_bruteforce(g, 1, 2);
        std::uint32_t all = (1u << g.n) - 1;
        for (int v = 0; v < g.n; ++v) {
            std::uint32_t bigger = base.set_mask | (1u << v);
            if (bigger == base.set_mask || bigger == all) continue;
            // adding any vertex adjacent to the set keeps it valid
            if ((g.adj[static_cast<size_t>(v)] & base.set_mask) != 0)
                CHECK(is_k_dominating_m_connected(g, bigger, 1, 2));
        }
    }
}

TEST_CASE("universal-vertex reduction") {
    SimpleGraph wheel = add_universal_vertex(cycle(4));
    CHECK(wheel.n == 5);
    CHECK(wheel.edge_count() == 8);
    for (int v = 0; v < 4; ++v) CHECK(wheel.has_edge(v, 4));

    SimpleGraph s = add_universal_vertex(SimpleGraph::empty(3));
    CHECK(s.edge_count() == 3);  // K_{1,3}

    SimpleGraph k4 = add_universal_vertex(clique(3));
    CHECK(k4.edge_count() == 6);
}

TEST_CASE("reduction identity on the named instances") {
    ReductionCheck c4 = verify_reduction_identity(cycle(4));
    CHECK(c4.holds);
    CHECK(c4.gamma == 2);
    CHECK(c4.cds_size == 3);

    ReductionCheck p3 = verify_reduction_identity(path(3));
    CHECK(p3.holds);
    CHECK(p3.gamma == 1);
    CHECK(p3.cds_size == 2);

    ReductionCheck k3 = verify_reduction_identity(clique(3));
    CHECK(k3.holds);
    CHECK(k3.gamma == 1);
    CHECK(k3.cds_size == 2);

    CHECK_THROWS_AS(verify_reduction_identity(SimpleGraph::empty(3)), Error);  // disconnected
}

TEST_CASE("reduction identity on random connected graphs") {
    std::mt19937_64 rng(79);
    std::uniform_int_distribution<int> nd(2, 6);
    for (int trial = 0; trial < 80; ++trial) {
        SimpleGraph g = random_connected(rng, nd(rng));
        CHECK(verify_reduction_identity(g).holds);
    }
}

TEST_CASE("best response buys a minimum 1,2-CDS inside the window") {
    for (const auto& [g, expected] :
         {std::pair{clique(3), 2}, std::pair{clique(4), 2}, std::pair{cycle(4), 3}}) {
        CorrespondenceReport rep = best_response_cds_correspondence(g, Rational(1));
        CHECK(rep.matches);
        CHECK(static_cast<int>(rep.bought.size()) == expected);
        CHECK(rep.min_cds.size == expected);
        CHECK(rep.alpha_in_before);
        CHECK(rep.alpha_in_after);
    }
    // frozen values: K_3 gives cost 2 + 22/5, C_4 gives 3 + 38/7
    CHECK(best_response_cds_correspondence(clique(3), Rational(1)).br_cost == ExtCost::ratio(32, 5));
    CHECK(best_response_cds_correspondence(cycle(4), Rational(1)).br_cost == ExtCost::ratio(59, 7));
}

TEST_CASE("the before-purchase window reading fails in its lower strip") {
    // K_4: alpha = 55/63 lies in the before-window (6/7, 31/30) but below the
    // after-window (8/9, 57/56); the best response buys more than a minimum
    // CDS there, so only the after reading supports the correspondence.
    CorrespondenceReport rep = best_response_cds_correspondence(clique(4), Rational(55, 63));
    CHECK(rep.alpha_in_before);
    CHECK_FALSE(rep.alpha_in_after);
    CHECK_FALSE(rep.matches);
    CHECK(rep.bought.size() == 4);
}

TEST_CASE("simple graph from multigraph") {
    OwnedMultiGraph g = OwnedMultiGraph::from_edges(3, {{0, 1, 0}, {0, 1, 1}, {1, 2, 1}}, 2);
    SimpleGraph s = simple_from_multigraph(g);
    CHECK(s.edge_count() == 2);
    CHECK(s.has_edge(0, 1));
    CHECK(s.has_edge(1, 2));
    CHECK_FALSE(s.has_edge(0, 2));
}
