#pragma once

#include "advncg/ext_cost.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace advncg {

using NodeId = int;

/// One undirected edge instance; owner is one of the two endpoints.
struct OwnedEdge {
    NodeId u, v, owner;

    bool operator==(const OwnedEdge&) const = default;
};

enum class CostModel { AdvNcg, Ncg, Kliemann };

struct GameConfig {
    Rational alpha;                      // edge price, >= 0
    CostModel model = CostModel::AdvNcg;
    int cap = 2;                         // max multiplicity per node pair, >= 1
    long long budget = 1'000'000;        // candidate strategies per best-response call
};

CostModel parse_cost_model(const std::string& name);  // "adv" | "ncg" | "kliemann"
std::string cost_model_name(CostModel m);

/// Per-agent strategies: agents[u] is a sorted multiset of targets in V\{u}.
struct StrategyVector {
    std::vector<std::vector<NodeId>> agents;

    int node_count() const { return static_cast<int>(agents.size()); }
    bool operator==(const StrategyVector&) const = default;
};

/// Labeled undirected multigraph with per-instance edge ownership: the game
/// state. Immutable after construction; all queries are pure.
class OwnedMultiGraph {
public:
    /// Validates: no self-loops, ids in range, owner an endpoint, pair
    /// multiplicity <= cap. Edges are stored in a canonical order.
    static OwnedMultiGraph from_edges(int n, std::vector<OwnedEdge> edges, int cap);
    static OwnedMultiGraph empty(int n) { return from_edges(n, {}, 1); }

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const OwnedEdge> edges() const { return edges_; }

    int multiplicity(NodeId a, NodeId b) const;
    /// Instances agent `owner` owns toward `target`.
    int owned_count(NodeId owner, NodeId target) const;
    int strategy_size(NodeId u) const;

    /// Deduplicated neighbor lists of the support graph, ascending.
    const std::vector<std::vector<NodeId>>& support_adjacency() const { return adj_; }

private:
    OwnedMultiGraph(int n, std::vector<OwnedEdge> edges);

    int n_ = 0;
    std::vector<OwnedEdge> edges_;           // sorted by (min,max,owner)
    std::vector<std::vector<NodeId>> adj_;   // support adjacency
};

/// Strategy vector -> owned multigraph (the bijection, forward direction).
OwnedMultiGraph build_from_strategies(int n, const StrategyVector& s, int cap);
/// Owned multigraph -> strategy vector (inverse; exact round trip).
StrategyVector strategies_of(const OwnedMultiGraph& g);

/// Hop distance on the support graph (parallel edges do not shorten paths);
/// infinity iff v is unreachable from u.
ExtCost graph_distance(const OwnedMultiGraph& g, NodeId u, NodeId v);

/// All hop distances from src; -1 marks unreachable nodes.
std::vector<int> hop_distances(const OwnedMultiGraph& g, NodeId src);

bool is_connected(const OwnedMultiGraph& g);

/// Connected, and removing any single edge instance leaves it connected.
/// A pair with multiplicity >= 2 counts as two edge-disjoint connections.
bool is_two_edge_connected(const OwnedMultiGraph& g);

/// State identity: equal iff same node count and same multiset of
/// (min(u,v), max(u,v), owner) triples. Order-insensitive, ownership-aware.
std::string canonical_key(const OwnedMultiGraph& g);

/// Stable 64-bit FNV-1a hash of the canonical key, for trace output.
std::uint64_t canonical_key_hash(const OwnedMultiGraph& g);

// --- text format -----------------------------------------------------------
//
//   advncg-graph v1
//   n <count>
//   e <u> <v> <owner>     (one line per edge instance; '#' starts a comment)

OwnedMultiGraph parse_graph_text(std::istream& in, int cap);
OwnedMultiGraph parse_graph_string(const std::string& text, int cap);
void write_graph_text(std::ostream& out, const OwnedMultiGraph& g);
std::string graph_to_string(const OwnedMultiGraph& g);

} // namespace advncg
