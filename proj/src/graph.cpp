#include "advncg/graph.hpp"
#include "advncg/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace advncg {

CostModel parse_cost_model(const std::string& name) {
    if (name == "adv" || name == "adv-ncg" || name == "advncg") return CostModel::AdvNcg;
    if (name == "ncg") return CostModel::Ncg;
    if (name == "kliemann" || name == "kli") return CostModel::Kliemann;
    throw Error(ErrorKind::Parse, "unknown cost model: '" + name + "'");
}

std::string cost_model_name(CostModel m) {
    switch (m) {
        case CostModel::AdvNcg: return "adv";
        case CostModel::Ncg: return "ncg";
        case CostModel::Kliemann: return "kliemann";
    }
    return "?";
}

OwnedMultiGraph::OwnedMultiGraph(int n, std::vector<OwnedEdge> edges)
    : n_(n), edges_(std::move(edges)), adj_(static_cast<size_t>(n)) {
    std::sort(edges_.begin(), edges_.end(), [](const OwnedEdge& a, const OwnedEdge& b) {
        return std::tie(a.u, a.v, a.owner) < std::tie(b.u, b.v, b.owner);
    });
    for (const auto& e : edges_) {
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
}

OwnedMultiGraph OwnedMultiGraph::from_edges(int n, std::vector<OwnedEdge> edges, int cap) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "node count must be >= 1");
    if (cap < 1) throw Error(ErrorKind::InvalidArgument, "multiplicity cap must be >= 1");
    std::map<std::pair<NodeId, NodeId>, int> mult;
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw Error(ErrorKind::InvalidTarget, "edge endpoint out of range");
        if (e.u == e.v) throw Error(ErrorKind::InvalidTarget, "self-loops are not allowed");
        if (e.owner != e.u && e.owner != e.v)
            throw Error(ErrorKind::InvalidArgument, "edge owner must be one of its endpoints");
        if (e.u > e.v) std::swap(e.u, e.v);
        int& m = mult[{e.u, e.v}];
        if (++m > cap)
            throw Error(ErrorKind::CapExceeded,
                        "pair (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") exceeds multiplicity cap " + std::to_string(cap));
    }
    return OwnedMultiGraph(n, std::move(edges));
}

int OwnedMultiGraph::multiplicity(NodeId a, NodeId b) const {
    if (a > b) std::swap(a, b);
    int m = 0;
    for (const auto& e : edges_)
        if (e.u == a && e.v == b) ++m;
    return m;
}

int OwnedMultiGraph::owned_count(NodeId owner, NodeId target) const {
    int m = 0;
    for (const auto& e : edges_)
        if (e.owner == owner && (e.u == target || e.v == target) && (e.u == owner || e.v == owner)) ++m;
    return m;
}

int OwnedMultiGraph::strategy_size(NodeId u) const {
    int m = 0;
    for (const auto& e : edges_)
        if (e.owner == u) ++m;
    return m;
}

OwnedMultiGraph build_from_strategies(int n, const StrategyVector& s, int cap) {
    if (s.node_count() != n)
        throw Error(ErrorKind::InvalidArgument, "strategy vector size does not match node count");
    std::vector<OwnedEdge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : s.agents[static_cast<size_t>(u)]) {
            if (v < 0 || v >= n) throw Error(ErrorKind::InvalidTarget, "strategy target out of range");
            if (v == u) throw Error(ErrorKind::InvalidTarget, "strategy target equals the agent");
            edges.push_back({u, v, u});
        }
    }
    return OwnedMultiGraph::from_edges(n, std::move(edges), cap);
}

StrategyVector strategies_of(const OwnedMultiGraph& g) {
    StrategyVector s;
    s.agents.assign(static_cast<size_t>(g.node_count()), {});
    for (const auto& e : g.edges()) {
        NodeId target = e.owner == e.u ? e.v : e.u;
        s.agents[static_cast<size_t>(e.owner)].push_back(target);
    }
    for (auto& a : s.agents) std::sort(a.begin(), a.end());
    return s;
}

std::vector<int> hop_distances(const OwnedMultiGraph& g, NodeId src) {
    if (src < 0 || src >= g.node_count())
        throw Error(ErrorKind::InvalidTarget, "node id out of range");
    std::vector<int> dist(static_cast<size_t>(g.node_count()), -1);
    std::deque<NodeId> queue{src};
    dist[static_cast<size_t>(src)] = 0;
    const auto& adj = g.support_adjacency();
    while (!queue.empty()) {
        NodeId x = queue.front();
        queue.pop_front();
        for (NodeId y : adj[static_cast<size_t>(x)]) {
            if (dist[static_cast<size_t>(y)] < 0) {
                dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

ExtCost graph_distance(const OwnedMultiGraph& g, NodeId u, NodeId v) {
    if (v < 0 || v >= g.node_count())
        throw Error(ErrorKind::InvalidTarget, "node id out of range");
    int d = hop_distances(g, u)[static_cast<size_t>(v)];
    return d < 0 ? ExtCost::infinity() : ExtCost(d);
}

bool is_connected(const OwnedMultiGraph& g) {
    auto dist = hop_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

namespace {

// Bridges of the support graph via Tarjan lowpoints. An edge instance of the
// multigraph is a bridge iff its pair is a support bridge with multiplicity 1.
std::vector<std::pair<NodeId, NodeId>> support_bridges(const OwnedMultiGraph& g) {
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
                parent_skipped = true;  // a second x-parent adjacency cannot exist in the support graph
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

} // namespace

bool is_two_edge_connected(const OwnedMultiGraph& g) {
    if (g.node_count() == 1) return true;
    if (!is_connected(g)) return false;
    for (auto [a, b] : support_bridges(g))
        if (g.multiplicity(a, b) == 1) return false;
    return true;
}

std::string canonical_key(const OwnedMultiGraph& g) {
    // edges() is already sorted by (u, v, owner)
    std::ostringstream os;
    os << "n" << g.node_count();
    for (const auto& e : g.edges()) os << "|" << e.u << "," << e.v << "," << e.owner;
    return os.str();
}

std::uint64_t canonical_key_hash(const OwnedMultiGraph& g) {
    std::string key = canonical_key(g);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

OwnedMultiGraph parse_graph_text(std::istream& in, int cap) {
    std::string line;
    int lineno = 0;
    int n = -1;
    bool header_seen = false;
    std::vector<OwnedEdge> edges;

    auto fail = [&](const std::string& msg) -> void {
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + msg, lineno);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line.erase(0, start);

        if (!header_seen) {
            if (line != "advncg-graph v1") fail("expected header 'advncg-graph v1'");
            header_seen = true;
            continue;
        }
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (n < 0) {
            long count = -1;
            if (tag != "n" || !(ls >> count) || count < 1) fail("expected 'n <count>'");
            std::string rest;
            if (ls >> rest) fail("trailing tokens after node count");
            n = static_cast<int>(count);
            continue;
        }
        if (tag != "e") fail("expected edge line 'e <u> <v> <owner>'");
        long u, v, o;
        if (!(ls >> u >> v >> o)) fail("expected edge line 'e <u> <v> <owner>'");
        std::string rest;
        if (ls >> rest) fail("trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n) fail("edge endpoint out of range");
        if (u == v) fail("self-loops are not allowed");
        if (o != u && o != v) fail("owner must be one of the edge endpoints");
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), static_cast<NodeId>(o)});
    }
    if (!header_seen) throw Error(ErrorKind::Parse, "empty input: missing 'advncg-graph v1' header", lineno);
    if (n < 0) throw Error(ErrorKind::Parse, "missing 'n <count>' line", lineno);
    try {
        return OwnedMultiGraph::from_edges(n, std::move(edges), cap);
    } catch (const Error& e) {
        throw Error(e.kind(), std::string("graph file: ") + e.what());
    }
}

OwnedMultiGraph parse_graph_string(const std::string& text, int cap) {
    std::istringstream is(text);
    return parse_graph_text(is, cap);
}

void write_graph_text(std::ostream& out, const OwnedMultiGraph& g) {
    out << "advncg-graph v1\n";
    out << "n " << g.node_count() << "\n";
    for (const auto& e : g.edges()) out << "e " << e.u << " " << e.v << " " << e.owner << "\n";
}

std::string graph_to_string(const OwnedMultiGraph& g) {
    std::ostringstream os;
    write_graph_text(os, g);
    return os.str();
}

} // namespace advncg
