#pragma once

#include "advncg/graph.hpp"

namespace advncg {

/// Edge instances whose removal increases the number of connected
/// components. An instance of a pair with multiplicity >= 2 is never one.
std::vector<OwnedEdge> bridges(const OwnedMultiGraph& g);

/// Hop diameter; infinity when disconnected.
ExtCost diameter(const OwnedMultiGraph& g);

/// Instances e of a 2-edge-connected g such that g - e contains a bridge.
/// Throws Error{Precondition} when g is not 2-edge-connected.
std::vector<OwnedEdge> two_cut_edges(const OwnedMultiGraph& g);

/// Shortest cycle of g through the given 2-cut-edge; it necessarily carries
/// every bridge of g - e. Returned as the node sequence v_1..v_k (the cycle
/// closes back to v_1), starting with e's endpoints, ties broken by
/// lexicographically least node sequence. Throws when e is not a 2-cut-edge.
std::vector<NodeId> cut_cycle_of(const OwnedMultiGraph& g, const OwnedEdge& e);

/// Max over all edge instances e of diameter(g - e). Requires g
/// 2-edge-connected; the result never exceeds 2 * diameter(g).
ExtCost diameter_after_worst_removal(const OwnedMultiGraph& g);

/// Nodes w such that removing the single instance of pair {e.u, e.v}
/// strictly increases d(v, w) — i.e. every shortest v-w path crosses that
/// pair and no parallel instance substitutes. Empty when multiplicity >= 2.
std::vector<NodeId> dependents(const OwnedMultiGraph& g, NodeId v, const OwnedEdge& e);

struct StructureReport {
    std::vector<OwnedEdge> bridge_edges;
    std::vector<OwnedEdge> two_cut;      // only filled when 2-edge-connected
    bool two_edge_connected = false;
    ExtCost diam;
    ExtCost worst_post_deletion_diameter;  // infinity when not 2-edge-connected
};

StructureReport analyze_structure(const OwnedMultiGraph& g);

} // namespace advncg
