#include "advncg/structure.hpp"
#include "advncg/error.hpp"

#include <algorithm>
#include <functional>

namespace advncg {

namespace {

std::vector<std::pair<NodeId, NodeId>> support_bridge_pairs(const OwnedMultiGraph& g) {
    int n = g.node_count();
    const auto& adj = g.support_adjacency();
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<std::pair<NodeId, NodeId>> out;
    int timer = 0;
    std::function<void(NodeId, NodeId)> dfs = [&](NodeId x, NodeId parent) {
        disc[static_cast<size_t>(x)] = low[static_cast<size_t>(x)] = timer++;
        bool parent_skipped = false;
        for (NodeId y : adj[static_cast<size_t>(x)]) {
            if (y == parent && !parent_skipped) {
                parent_skipped = true;
                continue;
            }
            if (disc[static_cast<size_t>(y)] < 0) {
                dfs(y, x);
                low[static_cast<size_t>(x)] = std::min(low[static_cast<size_t>(x)], low[static_cast<size_t>(y)]);
                if (low[static_cast<size_t>(y)] > disc[static_cast<size_t>(x)])
                    out.emplace_back(std::min(x, y), std::max(x, y));
            } else {
                low[static_cast<size_t>(x)] = std::min(low[static_cast<size_t>(x)], disc[static_cast<size_t>(y)]);
            }
        }
    };
    for (NodeId r = 0; r < n; ++r)
        if (disc[static_cast<size_t>(r)] < 0) dfs(r, -1);
    return out;
}

OwnedMultiGraph remove_instance(const OwnedMultiGraph& g, size_t idx) {
    std::vector<OwnedEdge> edges(g.edges().begin(), g.edges().end());
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(idx));
    return OwnedMultiGraph::from_edges(g.node_count(), std::move(edges), g.node_count() + 1);
}

int finite_diameter(const OwnedMultiGraph& g) {
    int d = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (int x : hop_distances(g, u)) {
            if (x < 0) return -1;
            d = std::max(d, x);
        }
    }
    return d;
}

} // namespace

std::vector<OwnedEdge> bridges(const OwnedMultiGraph& g) {
    auto pairs = support_bridge_pairs(g);
    std::vector<OwnedEdge> out;
    for (const auto& e : g.edges()) {
        auto p = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
        if (g.multiplicity(e.u, e.v) == 1 &&
            std::find(pairs.begin(), pairs.end(), p) != pairs.end())
            out.push_back(e);
    }
    return out;
}

ExtCost diameter(const OwnedMultiGraph& g) {
    int d = finite_diameter(g);
    return d < 0 ? ExtCost::infinity() : ExtCost(d);
}

std::vector<OwnedEdge> two_cut_edges(const OwnedMultiGraph& g) {
    if (!is_two_edge_connected(g))
        throw Error(ErrorKind::Precondition, "two_cut_edges requires a 2-edge-connected graph");
    std::vector<OwnedEdge> out;
    for (size_t i = 0; i < g.edges().size(); ++i) {
        if (!bridges(remove_instance(g, i)).empty()) out.push_back(g.edges()[i]);
    }
    return out;
}

std::vector<NodeId> cut_cycle_of(const OwnedMultiGraph& g, const OwnedEdge& e) {
    // locate the instance
    size_t idx = g.edges().size();
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const auto& f = g.edges()[i];
        if (std::min(f.u, f.v) == std::min(e.u, e.v) && std::max(f.u, f.v) == std::max(e.u, e.v) &&
            f.owner == e.owner) {
            idx = i;
            break;
        }
    }
    if (idx == g.edges().size())
        throw Error(ErrorKind::InvalidArgument, "edge instance is not part of the graph");

    OwnedMultiGraph rest = remove_instance(g, idx);
    if (bridges(rest).empty())
        throw Error(ErrorKind::Precondition, "edge is not a 2-cut-edge");

    NodeId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    // shortest cycle through e = e plus a shortest b->a path in g-e;
    // such a path crosses every bridge that the removal created.
    auto dist_a = hop_distances(rest, a);
    if (dist_a[static_cast<size_t>(b)] < 0)
        throw Error(ErrorKind::Precondition, "edge is a bridge, not a 2-cut-edge");
    std::vector<NodeId> cycle{a};
    NodeId cur = b;
    while (cur != a) {
        cycle.push_back(cur);
        NodeId next = -1;
        for (NodeId w : rest.support_adjacency()[static_cast<size_t>(cur)]) {
            if (dist_a[static_cast<size_t>(w)] == dist_a[static_cast<size_t>(cur)] - 1) {
                next = w;  // neighbors ascend, so the first hit is the lex-least
                break;
            }
        }
        cur = next;
    }
    return cycle;
}

ExtCost diameter_after_worst_removal(const OwnedMultiGraph& g) {
    if (!is_two_edge_connected(g))
        throw Error(ErrorKind::Precondition, "diameter_after_worst_removal requires 2-edge-connectivity");
    int base = finite_diameter(g);
    int worst = base;
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        if (g.multiplicity(e.u, e.v) >= 2) continue;  // support unchanged
        int d = finite_diameter(remove_instance(g, i));
        if (d < 0)
            throw std::logic_error("single deletion disconnected a 2-edge-connected graph");
        worst = std::max(worst, d);
    }
    if (worst > 2 * base)
        throw std::logic_error("post-deletion diameter exceeded twice the diameter");
    return ExtCost(worst);
}

std::vector<NodeId> dependents(const OwnedMultiGraph& g, NodeId v, const OwnedEdge& e) {
    if (v < 0 || v >= g.node_count()) throw Error(ErrorKind::InvalidTarget, "node id out of range");
    int mult = g.multiplicity(e.u, e.v);
    if (mult == 0) throw Error(ErrorKind::InvalidArgument, "edge instance is not part of the graph");
    if (mult >= 2) return {};  // a parallel instance substitutes

    size_t idx = 0;
    while (!(std::min(g.edges()[idx].u, g.edges()[idx].v) == std::min(e.u, e.v) &&
             std::max(g.edges()[idx].u, g.edges()[idx].v) == std::max(e.u, e.v)))
        ++idx;
    auto before = hop_distances(g, v);
    auto after = hop_distances(remove_instance(g, idx), v);
    std::vector<NodeId> out;
    for (NodeId w = 0; w < g.node_count(); ++w) {
        if (w == v) continue;
        int db = before[static_cast<size_t>(w)], da = after[static_cast<size_t>(w)];
        if (db < 0) continue;  // already unreachable in g
        if (da < 0 || da > db) out.push_back(w);
    }
    return out;
}

StructureReport analyze_structure(const OwnedMultiGraph& g) {
    StructureReport r;
    r.bridge_edges = bridges(g);
    r.two_edge_connected = is_two_edge_connected(g);
    r.diam = diameter(g);
    if (r.two_edge_connected && g.node_count() > 1) {
        r.two_cut = two_cut_edges(g);
        r.worst_post_deletion_diameter = diameter_after_worst_removal(g);
    } else if (g.node_count() == 1) {
        r.worst_post_deletion_diameter = ExtCost(0);
    } else {
        r.worst_post_deletion_diameter = ExtCost::infinity();
    }
    return r;
}

} // namespace advncg
