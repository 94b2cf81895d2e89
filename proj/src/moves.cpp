#include "advncg/moves.hpp"
#include "advncg/cost.hpp"
#include "advncg/error.hpp"
#include "advncg/pairs.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace advncg {

namespace {

std::string join_targets(const std::vector<NodeId>& ts) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < ts.size(); ++i) os << (i ? " " : "") << ts[i];
    os << "}";
    return os.str();
}

// Removes one occurrence of each element of `remove` from sorted `from`;
// throws NotOwner when an element is missing.
std::vector<NodeId> multiset_minus(std::vector<NodeId> from, const std::vector<NodeId>& remove) {
    for (NodeId t : remove) {
        auto it = std::find(from.begin(), from.end(), t);
        if (it == from.end())
            throw Error(ErrorKind::NotOwner, "agent owns no instance toward node " + std::to_string(t));
        from.erase(it);
    }
    return from;
}

} // namespace

std::string move_kind(const Move& m) {
    struct V {
        std::string operator()(const BuyMove&) const { return "buy"; }
        std::string operator()(const DeleteMove&) const { return "delete"; }
        std::string operator()(const SwapMove&) const { return "swap"; }
        std::string operator()(const MultiSwapMove&) const { return "multi-swap"; }
        std::string operator()(const ReplaceMove&) const { return "replace"; }
    };
    return std::visit(V{}, m);
}

std::string move_detail(const Move& m) {
    struct V {
        std::string operator()(const BuyMove& b) const { return std::to_string(b.target); }
        std::string operator()(const DeleteMove& d) const { return std::to_string(d.target); }
        std::string operator()(const SwapMove& s) const {
            return std::to_string(s.from) + "->" + std::to_string(s.to);
        }
        std::string operator()(const MultiSwapMove& s) const {
            return join_targets(s.removed) + "->" + join_targets(s.added);
        }
        std::string operator()(const ReplaceMove& r) const { return join_targets(r.strategy); }
    };
    return std::visit(V{}, m);
}

OwnedMultiGraph apply_move(const OwnedMultiGraph& g, NodeId u, const Move& m, int cap) {
    if (u < 0 || u >= g.node_count()) throw Error(ErrorKind::InvalidTarget, "agent id out of range");
    StrategyVector sv = strategies_of(g);
    auto& s = sv.agents[static_cast<size_t>(u)];

    if (const auto* b = std::get_if<BuyMove>(&m)) {
        s.push_back(b->target);
    } else if (const auto* d = std::get_if<DeleteMove>(&m)) {
        s = multiset_minus(std::move(s), {d->target});
    } else if (const auto* sw = std::get_if<SwapMove>(&m)) {
        s = multiset_minus(std::move(s), {sw->from});
        s.push_back(sw->to);
    } else if (const auto* ms = std::get_if<MultiSwapMove>(&m)) {
        if (ms->removed.size() != ms->added.size())
            throw Error(ErrorKind::InvalidArgument, "multi-swap must remove and add equally many edges");
        s = multiset_minus(std::move(s), ms->removed);
        s.insert(s.end(), ms->added.begin(), ms->added.end());
    } else if (const auto* r = std::get_if<ReplaceMove>(&m)) {
        s = r->strategy;
    }
    std::sort(s.begin(), s.end());
    return build_from_strategies(g.node_count(), sv, cap);
}

namespace {

// Shared scaffolding for exhaustive per-agent searches: everything is
// expressed as count vectors over u's targets on top of the fixed
// multiplicities owned by the other agents.
struct AgentSearch {
    int n;
    NodeId u;
    PairSpace ps;
    MultVec base;                   // multiplicities with u's own edges removed
    std::vector<NodeId> targets;    // ascending
    std::vector<int> own;           // u's current counts per target
    std::vector<int> headroom;      // cap minus what others own toward u
    std::vector<int> pair_idx;      // pair index per target
    const GameConfig* cfg;

    AgentSearch(const OwnedMultiGraph& g, const GameConfig& c, NodeId agent)
        : n(g.node_count()), u(agent), ps(g.node_count()), cfg(&c) {
        if (u < 0 || u >= n) throw Error(ErrorKind::InvalidTarget, "agent id out of range");
        base = multiplicities_of(ps, g);
        StrategyVector sv = strategies_of(g);
        std::vector<int> own_counts(static_cast<size_t>(n), 0);
        for (NodeId t : sv.agents[static_cast<size_t>(u)]) ++own_counts[static_cast<size_t>(t)];
        for (NodeId v = 0; v < n; ++v) {
            if (v == u) continue;
            targets.push_back(v);
            int p = ps.index(u, v);
            pair_idx.push_back(p);
            int mine = own_counts[static_cast<size_t>(v)];
            base[static_cast<size_t>(p)] = static_cast<std::uint8_t>(base[static_cast<size_t>(p)] - mine);
            own.push_back(mine);
            int room = c.cap - base[static_cast<size_t>(p)];
            if (room < mine)
                throw Error(ErrorKind::Precondition, "current strategy exceeds the configured cap");
            headroom.push_back(room);
        }
    }

    long long candidate_count() const {
        long long total = 1;
        for (int h : headroom) {
            total *= h + 1;
            if (total > cfg->budget) return total;
        }
        return total;
    }

    // agent_cost of the strategy given by per-target counts
    ExtCost cost_of(const std::vector<int>& counts) const {
        MultVec m = base;
        long long size = 0;
        for (size_t i = 0; i < counts.size(); ++i) {
            m[static_cast<size_t>(pair_idx[i])] =
                static_cast<std::uint8_t>(m[static_cast<size_t>(pair_idx[i])] + counts[i]);
            size += counts[i];
        }
        ExtCost edge_cost(cfg->alpha * size);
        int edges = total_edges(m);
        if (n == 1) return edge_cost;
        switch (cfg->model) {
            case CostModel::AdvNcg: {
                if (edges == 0) return ExtCost::infinity();
                return edge_cost + deletion_delta_sum(ps, m, u).to_cost();
            }
            case CostModel::Ncg: {
                long long d = plain_delta_sum(ps, m, u);
                return d < 0 ? ExtCost::infinity() : edge_cost + ExtCost(d);
            }
            case CostModel::Kliemann: {
                if (edges == 0) return edge_cost + ExtCost(n - 1);
                return edge_cost + deletion_unreachable_sum(ps, m, u).to_cost();
            }
        }
        throw Error(ErrorKind::InvalidArgument, "unknown cost model");
    }

    std::vector<NodeId> to_multiset(const std::vector<int>& counts) const {
        std::vector<NodeId> out;
        for (size_t i = 0; i < counts.size(); ++i)
            out.insert(out.end(), static_cast<size_t>(counts[i]), targets[i]);
        return out;
    }

    // Enumerates count vectors with counts[i] in [lo_i, hi_i]; fn may return
    // false to stop early. Returns false when stopped.
    template <typename Fn>
    static bool odometer(const std::vector<int>& lo, const std::vector<int>& hi, Fn&& fn) {
        std::vector<int> counts(lo);
        while (true) {
            if (!fn(counts)) return false;
            size_t i = 0;
            for (; i < counts.size(); ++i) {
                if (counts[i] < hi[i]) {
                    ++counts[i];
                    for (size_t j = 0; j < i; ++j) counts[j] = lo[j];
                    break;
                }
            }
            if (i == counts.size()) return true;
        }
    }
};

} // namespace

BestResponseResult best_response_exact(const OwnedMultiGraph& g, const GameConfig& cfg, NodeId u) {
    AgentSearch search(g, cfg, u);
    if (search.candidate_count() > cfg.budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "best-response space exceeds budget of " + std::to_string(cfg.budget));

    const std::vector<int> zeros(search.targets.size(), 0);
    BestResponseResult res;
    res.current_cost = search.cost_of(search.own);

    bool have_best = false;
    bool current_is_best = false;
    std::vector<NodeId> best_multiset;
    AgentSearch::odometer(zeros, search.headroom, [&](const std::vector<int>& counts) {
        ExtCost c = search.cost_of(counts);
        if (!have_best || c < res.cost) {
            have_best = true;
            res.cost = c;
            res.ties = 1;
            best_multiset = search.to_multiset(counts);
            current_is_best = counts == search.own;
        } else if (c == res.cost) {
            ++res.ties;
            if (counts == search.own) {
                current_is_best = true;
            } else if (!current_is_best) {
                auto ms = search.to_multiset(counts);
                if (std::lexicographical_compare(ms.begin(), ms.end(), best_multiset.begin(),
                                                 best_multiset.end()))
                    best_multiset = std::move(ms);
            }
        }
        return true;
    });

    res.improving = res.cost < res.current_cost;
    res.strategy = (current_is_best || !res.improving) ? search.to_multiset(search.own)
                                                       : std::move(best_multiset);
    return res;
}

NashResult is_nash_equilibrium(const OwnedMultiGraph& g, const GameConfig& cfg) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
        BestResponseResult br = best_response_exact(g, cfg, u);
        if (br.improving)
            return {false, NashWitness{u, br.strategy, br.current_cost, br.cost}};
    }
    return {true, std::nullopt};
}

bool has_improving_strategy(const OwnedMultiGraph& g, const GameConfig& cfg, NodeId u) {
    AgentSearch search(g, cfg, u);
    if (search.candidate_count() > cfg.budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "best-response space exceeds budget of " + std::to_string(cfg.budget));
    ExtCost current = search.cost_of(search.own);
    const std::vector<int> zeros(search.targets.size(), 0);
    bool all_checked = AgentSearch::odometer(zeros, search.headroom, [&](const std::vector<int>& counts) {
        return !(search.cost_of(counts) < current);
    });
    return !all_checked;
}

std::vector<std::vector<NodeId>> improving_strategies(const OwnedMultiGraph& g, const GameConfig& cfg,
                                                      NodeId u) {
    AgentSearch search(g, cfg, u);
    if (search.candidate_count() > cfg.budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "best-response space exceeds budget of " + std::to_string(cfg.budget));
    ExtCost current = search.cost_of(search.own);
    std::vector<std::vector<NodeId>> out;
    const std::vector<int> zeros(search.targets.size(), 0);
    AgentSearch::odometer(zeros, search.headroom, [&](const std::vector<int>& counts) {
        if (search.cost_of(counts) < current) out.push_back(search.to_multiset(counts));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool check_monotone_buy_delete(const OwnedMultiGraph& g, const GameConfig& cfg, NodeId u) {
    AgentSearch search(g, cfg, u);
    ExtCost current = search.cost_of(search.own);
    size_t t = search.targets.size();

    // pure buys: add[i] on top of own[i], bounded by the pair headroom
    std::vector<int> buy_room(t);
    for (size_t i = 0; i < t; ++i) buy_room[i] = search.headroom[i] - search.own[i];
    // pure deletes: counts between 0 and own[i]
    for (int phase = 0; phase < 2; ++phase) {
        bool buying = phase == 0;
        std::vector<int> lo = buying ? search.own : std::vector<int>(t, 0);
        std::vector<int> hi = buying ? search.headroom : search.own;

        long long space = 1;
        for (size_t i = 0; i < t; ++i) {
            space *= hi[i] - lo[i] + 1;
            if (space > cfg.budget)
                throw Error(ErrorKind::BudgetExceeded, "monotonicity check exceeds search budget");
        }

        bool single_improves = false;
        for (size_t i = 0; i < t && !single_improves; ++i) {
            std::vector<int> counts = search.own;
            if (buying) {
                if (buy_room[i] < 1) continue;
                counts[i] += 1;
            } else {
                if (search.own[i] < 1) continue;
                counts[i] -= 1;
            }
            single_improves = search.cost_of(counts) < current;
        }
        if (single_improves) continue;  // implication is vacuous

        bool violated = !AgentSearch::odometer(lo, hi, [&](const std::vector<int>& counts) {
            int moved = 0;
            for (size_t i = 0; i < t; ++i) moved += std::abs(counts[i] - search.own[i]);
            if (moved >= 2 && search.cost_of(counts) < current) return false;
            return true;
        });
        if (violated) return false;
    }
    return true;
}

SaturationProfile distance_saturation_profile(const OwnedMultiGraph& g, NodeId u) {
    if (u < 0 || u >= g.node_count()) throw Error(ErrorKind::InvalidTarget, "agent id out of range");
    SaturationProfile out;
    int n = g.node_count();
    out.edges_total = g.edge_count();
    out.edges_without_own = g.edge_count() - g.strategy_size(u);

    out.hypothesis_holds = true;
    for (NodeId v : g.support_adjacency()[static_cast<size_t>(u)])
        if (g.multiplicity(u, v) >= 2) out.hypothesis_holds = false;

    auto fill_window = [](SaturationProfile::Window& w, int e) {
        if (e < 2) return;
        w.valid = true;
        w.lo = 1 - Rational(1, e + 1);
        w.hi = 1 + Rational(1, static_cast<long long>(e) * (e - 1));
    };
    fill_window(out.window_total, out.edges_total);
    fill_window(out.window_without_own, out.edges_without_own);

    if (g.edge_count() == 0 || n == 1) {
        out.neighbors_ok = out.non_neighbors_ok = n == 1;
        return out;
    }

    // per-target sums of d_{G-e}(u, v) over all deletions; -1 once infinite
    PairSpace ps(n);
    MultVec m = multiplicities_of(ps, g);
    SupportMasks masks;
    masks.build(ps, m);
    std::vector<long long> sums(static_cast<size_t>(n), 0);
    auto accumulate = [&](NodeId skip_a, NodeId skip_b, int weight) {
        // one BFS from u with an optional removed support edge
        std::vector<int> dist(static_cast<size_t>(n), -1);
        std::vector<NodeId> queue{u};
        dist[static_cast<size_t>(u)] = 0;
        size_t head = 0;
        while (head < queue.size()) {
            NodeId x = queue[head++];
            std::uint32_t nb = masks.adj[x];
            if (x == skip_a) nb &= ~(1u << skip_b);
            else if (x == skip_b) nb &= ~(1u << skip_a);
            while (nb) {
                int y = std::countr_zero(nb);
                nb &= nb - 1;
                if (dist[static_cast<size_t>(y)] < 0) {
                    dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                    queue.push_back(static_cast<NodeId>(y));
                }
            }
        }
        for (NodeId v = 0; v < n; ++v) {
            if (sums[static_cast<size_t>(v)] < 0) continue;
            if (dist[static_cast<size_t>(v)] < 0)
                sums[static_cast<size_t>(v)] = -1;
            else
                sums[static_cast<size_t>(v)] += static_cast<long long>(weight) * dist[static_cast<size_t>(v)];
        }
    };
    for (int p = 0; p < ps.pair_count(); ++p) {
        int mult = m[static_cast<size_t>(p)];
        if (mult == 0) continue;
        auto [a, b] = ps.nodes(p);
        if (mult >= 2)
            accumulate(-1, -1, mult);
        else
            accumulate(a, b, 1);
    }

    const auto& nbs = g.support_adjacency()[static_cast<size_t>(u)];
    long long E = g.edge_count();
    out.neighbors_ok = out.non_neighbors_ok = true;
    for (NodeId v = 0; v < n; ++v) {
        if (v == u) continue;
        bool neighbor = std::binary_search(nbs.begin(), nbs.end(), v);
        long long want = neighbor ? E + 1 : 2 * E;  // 1 + 1/|E| resp. exactly 2
        if (sums[static_cast<size_t>(v)] != want) {
            out.violating.push_back(v);
            (neighbor ? out.neighbors_ok : out.non_neighbors_ok) = false;
        }
    }
    return out;
}

} // namespace advncg
