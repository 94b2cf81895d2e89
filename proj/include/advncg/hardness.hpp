#pragma once

#include "advncg/graph.hpp"
#include "advncg/moves.hpp"

#include <cstdint>

namespace advncg {

/// Undirected simple graph (no owners, no parallels), n <= 31, adjacency as
/// bitmasks.
struct SimpleGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;

    static SimpleGraph empty(int n);
    static SimpleGraph from_edges(int n, const std::vector<std::pair<NodeId, NodeId>>& edges);

    void add_edge(NodeId u, NodeId v);
    bool has_edge(NodeId u, NodeId v) const;
    int edge_count() const;
    bool connected() const;
};

/// Collapses multiplicities and drops ownership.
SimpleGraph simple_from_multigraph(const OwnedMultiGraph& g);

/// True iff every vertex outside `subset` has >= k neighbors inside it and
/// the induced subgraph is m-connected (m = 1: connected and non-empty, a
/// single vertex counts; m = 2: >= 3 vertices, connected, no cut vertex).
/// Only m in {1, 2} is supported.
bool is_k_dominating_m_connected(const SimpleGraph& g, std::uint32_t subset, int m, int k);

struct CdsResult {
    std::uint32_t set_mask = 0;
    std::vector<NodeId> nodes;  // ascending
    int size = 0;
};

/// Minimum m-connected k-dominating set by subset enumeration ascending in
/// cardinality (lexicographically least among minima). Throws
/// Error{Infeasible} when no subset qualifies.
CdsResult min_mk_cds_bruteforce(const SimpleGraph& g, int m, int k);

/// Minimum dominating set size (gamma), same enumeration scheme.
CdsResult min_dominating_set_bruteforce(const SimpleGraph& g);

/// g plus one new vertex (id n) adjacent to every original vertex.
SimpleGraph add_universal_vertex(const SimpleGraph& g);

struct ReductionCheck {
    bool holds = false;   // cds_size == gamma + 1
    int gamma = 0;        // minimum dominating set of g
    int cds_size = 0;     // minimum 1-connected 2-dominating set of g + universal
};

/// Requires g connected.
ReductionCheck verify_reduction_identity(const SimpleGraph& g);

struct CorrespondenceReport {
    bool matches = false;            // best response = buying a minimum 1,2-CDS
    std::vector<NodeId> bought;      // the new agent's best response targets
    ExtCost br_cost;
    CdsResult min_cds;
    // alpha windows under both |E| readings (see SaturationProfile)
    SaturationProfile::Window window_before;  // |E| of g alone
    SaturationProfile::Window window_after;   // |E| of g plus the purchase
    bool alpha_in_before = false, alpha_in_after = false;
};

/// Builds the game instance: g's edges owned by their smaller endpoint plus
/// a fresh agent (id n) with an empty strategy, then checks that the fresh
/// agent's exhaustive best response buys exactly a minimum 1-connected
/// 2-dominating set of g. Cap 2; nobody owns an edge toward the new agent.
CorrespondenceReport best_response_cds_correspondence(const SimpleGraph& g, const Rational& alpha,
                                                      long long budget = 1'000'000);

} // namespace advncg
