#include "advncg/hardness.hpp"
#include "advncg/error.hpp"

#include <algorithm>
#include <bit>

namespace advncg {

SimpleGraph SimpleGraph::empty(int n) {
    if (n < 1 || n > 31) throw Error(ErrorKind::InvalidArgument, "SimpleGraph supports 1 <= n <= 31");
    SimpleGraph g;
    g.n = n;
    g.adj.assign(static_cast<size_t>(n), 0);
    return g;
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
    SimpleGraph g = empty(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void SimpleGraph::add_edge(NodeId u, NodeId v) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw Error(ErrorKind::InvalidTarget, "endpoint out of range");
    if (u == v) throw Error(ErrorKind::InvalidTarget, "self-loops are not allowed");
    adj[static_cast<size_t>(u)] |= 1u << v;
    adj[static_cast<size_t>(v)] |= 1u << u;
}

bool SimpleGraph::has_edge(NodeId u, NodeId v) const {
    return (adj[static_cast<size_t>(u)] >> v) & 1u;
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (auto m : adj) total += std::popcount(m);
    return total / 2;
}

namespace {

// connectivity of the subgraph induced by `subset` (assumed non-empty)
bool induced_connected(const SimpleGraph& g, std::uint32_t subset) {
    std::uint32_t start = subset & static_cast<std::uint32_t>(-static_cast<std::int32_t>(subset));
    std::uint32_t seen = start, frontier = start;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            int x = std::countr_zero(f);
            f &= f - 1;
            next |= g.adj[static_cast<size_t>(x)] & subset;
        }
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == subset;
}

} // namespace

bool SimpleGraph::connected() const {
    std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    return induced_connected(*this, all);
}

SimpleGraph simple_from_multigraph(const OwnedMultiGraph& g) {
    SimpleGraph s = SimpleGraph::empty(g.node_count());
    for (const auto& e : g.edges())
        if (!s.has_edge(e.u, e.v)) s.add_edge(e.u, e.v);
    return s;
}

bool is_k_dominating_m_connected(const SimpleGraph& g, std::uint32_t subset, int m, int k) {
    if (m < 1 || m > 2) throw Error(ErrorKind::InvalidArgument, "only m in {1,2} is supported");
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1");
    if (subset == 0) return false;
    std::uint32_t all = g.n == 32 ? ~0u : (1u << g.n) - 1;
    std::uint32_t outside = all & ~subset;
    while (outside) {
        int v = std::countr_zero(outside);
        outside &= outside - 1;
        if (std::popcount(g.adj[static_cast<size_t>(v)] & subset) < k) return false;
    }
    if (!induced_connected(g, subset)) return false;
    if (m == 2) {
        if (std::popcount(subset) < 3) return false;
        std::uint32_t s = subset;
        while (s) {  // no cut vertex inside the induced subgraph
            std::uint32_t low = s & static_cast<std::uint32_t>(-static_cast<std::int32_t>(s));
            s &= s - 1;
            if (!induced_connected(g, subset & ~low)) return false;
        }
    }
    return true;
}

namespace {

// Enumerates node subsets of size `size` in lexicographic order of the
// ascending node list; returns the first one satisfying `pred`.
template <typename Pred>
bool first_subset_of_size(int n, int size, const Pred& pred, std::uint32_t& out) {
    std::vector<int> idx(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (int i : idx) mask |= 1u << i;
        if (pred(mask)) {
            out = mask;
            return true;
        }
        int i = size - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - size + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

template <typename Pred>
CdsResult min_subset(const SimpleGraph& g, const Pred& pred, const std::string& what) {
    for (int size = 1; size <= g.n; ++size) {
        std::uint32_t mask = 0;
        if (first_subset_of_size(g.n, size, pred, mask)) {
            CdsResult r;
            r.set_mask = mask;
            r.size = size;
            for (int v = 0; v < g.n; ++v)
                if ((mask >> v) & 1u) r.nodes.push_back(v);
            return r;
        }
    }
    throw Error(ErrorKind::Infeasible, "no " + what + " exists");
}

} // namespace

CdsResult min_mk_cds_bruteforce(const SimpleGraph& g, int m, int k) {
    return min_subset(
        g, [&](std::uint32_t mask) { return is_k_dominating_m_connected(g, mask, m, k); },
        "m-connected k-dominating set");
}

CdsResult min_dominating_set_bruteforce(const SimpleGraph& g) {
    std::uint32_t all = g.n == 32 ? ~0u : (1u << g.n) - 1;
    return min_subset(
        g,
        [&](std::uint32_t mask) {
            std::uint32_t outside = all & ~mask;
            while (outside) {
                int v = std::countr_zero(outside);
                outside &= outside - 1;
                if ((g.adj[static_cast<size_t>(v)] & mask) == 0) return false;
            }
            return true;
        },
        "dominating set");
}

SimpleGraph add_universal_vertex(const SimpleGraph& g) {
    SimpleGraph out = SimpleGraph::empty(g.n + 1);
    for (NodeId u = 0; u < g.n; ++u) {
        out.adj[static_cast<size_t>(u)] = g.adj[static_cast<size_t>(u)];
        out.add_edge(u, g.n);
    }
    return out;
}

ReductionCheck verify_reduction_identity(const SimpleGraph& g) {
    if (!g.connected())
        throw Error(ErrorKind::Precondition, "reduction identity requires a connected graph");
    ReductionCheck out;
    out.gamma = min_dominating_set_bruteforce(g).size;
    out.cds_size = min_mk_cds_bruteforce(add_universal_vertex(g), 1, 2).size;
    out.holds = out.cds_size == out.gamma + 1;
    return out;
}

CorrespondenceReport best_response_cds_correspondence(const SimpleGraph& g, const Rational& alpha,
                                                      long long budget) {
    CorrespondenceReport rep;
    rep.min_cds = min_mk_cds_bruteforce(g, 1, 2);

    std::vector<OwnedEdge> edges;
    for (NodeId u = 0; u < g.n; ++u)
        for (NodeId v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) edges.push_back({u, v, u});
    OwnedMultiGraph game = OwnedMultiGraph::from_edges(g.n + 1, std::move(edges), 2);

    GameConfig cfg;
    cfg.alpha = alpha;
    cfg.cap = 2;
    cfg.budget = budget;
    BestResponseResult br = best_response_exact(game, cfg, g.n);
    rep.bought = br.strategy;
    rep.br_cost = br.cost;

    bool distinct = std::adjacent_find(br.strategy.begin(), br.strategy.end()) == br.strategy.end();
    std::uint32_t mask = 0;
    for (NodeId t : br.strategy) mask |= 1u << t;
    rep.matches = distinct && static_cast<int>(br.strategy.size()) == rep.min_cds.size &&
                  is_k_dominating_m_connected(g, mask, 1, 2);

    auto fill = [](SaturationProfile::Window& w, long long e) {
        if (e < 2) return;
        w.valid = true;
        w.lo = 1 - Rational(1, e + 1);
        w.hi = 1 + Rational(1, e * (e - 1));
    };
    fill(rep.window_before, g.edge_count());
    fill(rep.window_after, g.edge_count() + static_cast<long long>(br.strategy.size()));
    rep.alpha_in_before = rep.window_before.contains(alpha);
    rep.alpha_in_after = rep.window_after.contains(alpha);
    return rep;
}

} // namespace advncg
