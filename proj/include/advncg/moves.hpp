#pragma once

#include "advncg/graph.hpp"

#include <optional>
#include <variant>

namespace advncg {

// Strategy changes of a single agent.
struct BuyMove { NodeId target; };                       // add one owned instance
struct DeleteMove { NodeId target; };                    // remove one owned instance
struct SwapMove { NodeId from, to; };                    // retarget one owned instance
struct MultiSwapMove {
    std::vector<NodeId> removed, added;                  // equal sizes, removed owned
};
struct ReplaceMove { std::vector<NodeId> strategy; };    // full new multiset

using Move = std::variant<BuyMove, DeleteMove, SwapMove, MultiSwapMove, ReplaceMove>;

std::string move_kind(const Move& m);
std::string move_detail(const Move& m);

/// Applies m to agent u's strategy; every other agent's strategy is
/// untouched. Errors: NotOwner (deleting/swapping an instance u does not
/// own), CapExceeded, InvalidTarget.
OwnedMultiGraph apply_move(const OwnedMultiGraph& g, NodeId u, const Move& m, int cap);

struct BestResponseResult {
    std::vector<NodeId> strategy;  // sorted multiset; current strategy when not improving
    ExtCost cost;                  // exact minimum over all strategies
    ExtCost current_cost;
    bool improving = false;        // cost < current_cost
    long long ties = 0;            // number of distinct optimal strategies
};

/// Exact minimizer of agent_cost over all multisets over V\{u} whose
/// combined pair multiplicities respect cfg.cap (edges others own toward u
/// count against the cap). Ties: the current strategy wins; among improving
/// optima the lexicographically least multiset is reported.
/// Throws Error{BudgetExceeded} when the candidate space exceeds cfg.budget.
BestResponseResult best_response_exact(const OwnedMultiGraph& g, const GameConfig& cfg, NodeId u);

struct NashWitness {
    NodeId agent;
    std::vector<NodeId> strategy;  // an improving strategy for that agent
    ExtCost current_cost, best_cost;
    ExtCost delta() const { return current_cost - best_cost; }
};

struct NashResult {
    bool is_ne = false;
    std::optional<NashWitness> witness;  // set when is_ne is false
};

/// True iff no agent has a strictly improving strategy change.
NashResult is_nash_equilibrium(const OwnedMultiGraph& g, const GameConfig& cfg);

/// True iff some strategy change strictly improves u's cost. Early-exits on
/// the first improving candidate, so cheaper than best_response_exact when
/// scanning large state spaces.
bool has_improving_strategy(const OwnedMultiGraph& g, const GameConfig& cfg, NodeId u);

/// All strictly improving strategies for u, as sorted multisets in
/// lexicographic order (the arcs of the improving-move state graph).
std::vector<std::vector<NodeId>> improving_strategies(const OwnedMultiGraph& g, const GameConfig& cfg,
                                                      NodeId u);

/// Checks both implications for agent u, exhaustively:
///   no single buy improves    => no pure multi-buy improves
///   no single delete improves => no pure multi-delete improves
bool check_monotone_buy_delete(const OwnedMultiGraph& g, const GameConfig& cfg, NodeId u);

/// Expected-pairwise-distance profile of agent u: whether u sits at
/// 1 + 1/|E| (expected) from every support neighbor and exactly 2 from
/// every non-neighbor. In that configuration, buying the minimum number of
/// edges achieving it is a best response for alpha strictly inside
/// (1 - 1/(|E|+1), 1 + 1/(|E|(|E|-1))); the edge count can be read as
/// including or excluding u's own purchases, so both windows are reported.
struct SaturationProfile {
    bool hypothesis_holds = false;  // u touches no pair of multiplicity >= 2
    bool neighbors_ok = false;
    bool non_neighbors_ok = false;
    bool satisfied() const { return neighbors_ok && non_neighbors_ok; }
    std::vector<NodeId> violating;

    int edges_total = 0;       // |E| of the graph as given
    int edges_without_own = 0; // |E| minus |S_u|
    struct Window {
        bool valid = false;    // requires edge count >= 2
        Rational lo, hi;       // open interval
        bool contains(const Rational& a) const { return valid && lo < a && a < hi; }
    };
    Window window_total, window_without_own;
};

SaturationProfile distance_saturation_profile(const OwnedMultiGraph& g, NodeId u);

} // namespace advncg
