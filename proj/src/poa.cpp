#include "advncg/poa.hpp"
#include "advncg/cost.hpp"
#include "advncg/error.hpp"
#include "advncg/families.hpp"
#include "advncg/moves.hpp"
#include "advncg/pairs.hpp"

#include <random>

namespace advncg {

namespace {

// ownership-resolved option per pair: counts (toward_smaller, toward_larger)
// owned by the larger resp. smaller endpoint
using PairSplit = std::pair<int, int>;

std::vector<PairSplit> splits_up_to(int cap) {
    std::vector<PairSplit> out;
    for (int a = 0; a <= cap; ++a)
        for (int b = 0; a + b <= cap; ++b) out.emplace_back(a, b);
    return out;
}

OwnedMultiGraph materialize(const PairSpace& ps, const std::vector<int>& choice,
                            const std::vector<PairSplit>& splits, int cap) {
    std::vector<OwnedEdge> edges;
    for (int p = 0; p < ps.pair_count(); ++p) {
        auto [a, b] = ps.nodes(p);
        auto [owned_by_a, owned_by_b] = splits[static_cast<size_t>(choice[static_cast<size_t>(p)])];
        for (int i = 0; i < owned_by_a; ++i) edges.push_back({a, b, a});
        for (int i = 0; i < owned_by_b; ++i) edges.push_back({a, b, b});
    }
    return OwnedMultiGraph::from_edges(ps.n(), std::move(edges), cap);
}

bool state_is_ne(const OwnedMultiGraph& g, const GameConfig& cfg) {
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (has_improving_strategy(g, cfg, u)) return false;
    return true;
}

} // namespace

void for_each_state(int n, int cap, long long state_budget,
                    const std::function<void(const OwnedMultiGraph&)>& fn) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
    if (n == 1) {
        fn(OwnedMultiGraph::empty(1));
        return;
    }
    PairSpace ps(n);
    const auto splits = splits_up_to(cap);
    long long states = 1;
    for (int p = 0; p < ps.pair_count(); ++p) {
        states *= static_cast<long long>(splits.size());
        if (states > state_budget)
            throw Error(ErrorKind::BudgetExceeded,
                        "state space exceeds budget of " + std::to_string(state_budget) +
                            "; use sampled mode");
    }
    std::vector<int> choice(static_cast<size_t>(ps.pair_count()), 0);
    while (true) {
        fn(materialize(ps, choice, splits, cap));
        size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (choice[i] + 1 < static_cast<int>(splits.size())) {
                ++choice[i];
                std::fill(choice.begin(), choice.begin() + static_cast<std::ptrdiff_t>(i), 0);
                break;
            }
        }
        if (i == choice.size()) break;
    }
}

bool for_each_ne(int n, const GameConfig& cfg, const NeSearchOptions& opts,
                 const std::function<void(const OwnedMultiGraph&)>& fn) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
    if (n == 1) {
        fn(OwnedMultiGraph::empty(1));
        return true;
    }
    PairSpace ps(n);
    const auto splits = splits_up_to(cfg.cap);

    if (!opts.sampled) {
        for_each_state(n, cfg.cap, opts.state_budget, [&](const OwnedMultiGraph& g) {
            if (state_is_ne(g, cfg)) fn(g);
        });
        return true;
    }

    // sampled mode: witness families first, then random states
    std::vector<OwnedMultiGraph> witnesses;
    witnesses.push_back(build_family({FamilyKind::DoubledClique, n, 0}));
    witnesses.push_back(build_family({FamilyKind::DoubledStar, n, 0}));
    if (n >= 3) witnesses.push_back(build_family({FamilyKind::Cycle, n, 0}));
    for (int k = 0; k <= n * (n - 1) / 2; ++k)
        witnesses.push_back(build_family({FamilyKind::PartialDoubledClique, n, k}));
    for (const auto& g : witnesses)
        if (state_is_ne(g, cfg)) fn(g);

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<size_t> pick(0, splits.size() - 1);
    std::vector<int> choice(static_cast<size_t>(ps.pair_count()), 0);
    for (long long s = 0; s < opts.samples; ++s) {
        for (auto& c : choice) c = static_cast<int>(pick(rng));
        OwnedMultiGraph g = materialize(ps, choice, splits, cfg.cap);
        if (state_is_ne(g, cfg)) fn(g);
    }
    return false;
}

PoaCell poa_cell(int n, const Rational& alpha, const GameConfig& base_cfg, const NeSearchOptions& opts) {
    GameConfig cfg = base_cfg;
    cfg.alpha = alpha;

    PoaCell cell;
    cell.n = n;
    cell.alpha = alpha;
    cell.opt_cost = optimum_bruteforce(n, alpha, cfg.cap, opts.state_budget).cost;
    cell.best_ne_cost = ExtCost::infinity();
    cell.worst_ne_cost = ExtCost::infinity();

    bool first = true;
    cell.search_complete = for_each_ne(n, cfg, opts, [&](const OwnedMultiGraph& g) {
        ExtCost sc = social_cost(g, cfg);
        ++cell.ne_count;
        if (first || sc < cell.best_ne_cost) cell.best_ne_cost = sc;
        if (first || sc > cell.worst_ne_cost) cell.worst_ne_cost = sc;
        first = false;
    });
    return cell;
}

std::vector<PoaCell> poa_grid(int n, const std::vector<Rational>& alphas, const GameConfig& base_cfg,
                              const NeSearchOptions& opts) {
    std::vector<PoaCell> out;
    out.reserve(alphas.size());
    for (const Rational& a : alphas) out.push_back(poa_cell(n, a, base_cfg, opts));
    return out;
}

} // namespace advncg
