#pragma once

#include "advncg/graph.hpp"

#include <functional>

namespace advncg {

struct NeSearchOptions {
    long long state_budget = 1'000'000;  // ownership-resolved states (exhaustive mode)
    bool sampled = false;                // sample states instead of enumerating
    long long samples = 50'000;
    std::uint64_t seed = 1;
};

/// Visits every ownership-resolved game state on n agents with per-pair
/// multiplicity up to cap (each pair: all owner splits (a,b) with
/// a + b <= cap). Throws Error{BudgetExceeded} past state_budget.
void for_each_state(int n, int cap, long long state_budget,
                    const std::function<void(const OwnedMultiGraph&)>& fn);

/// Visits ownership-resolved game states on n agents with per-pair
/// multiplicity up to cfg.cap and calls fn for every Nash equilibrium.
/// Exhaustive unless opts.sampled, in which case `samples` random states
/// plus a set of witness families (doubled cliques, doubled star, cycles)
/// are checked instead. Returns true when the enumeration was exhaustive.
bool for_each_ne(int n, const GameConfig& cfg, const NeSearchOptions& opts,
                 const std::function<void(const OwnedMultiGraph&)>& fn);

struct PoaCell {
    int n = 0;
    Rational alpha;
    ExtCost opt_cost;
    ExtCost best_ne_cost, worst_ne_cost;  // infinity when no NE was found
    long long ne_count = 0;
    bool search_complete = false;

    bool has_ratios() const { return ne_count > 0 && opt_cost.is_finite() && worst_ne_cost.is_finite(); }
    Rational poa() const { return worst_ne_cost.value() / opt_cost.value(); }
    Rational pos() const { return best_ne_cost.value() / opt_cost.value(); }
};

/// Exact optimum (brute force over edge multisets) and extreme equilibrium
/// social costs for one (n, alpha). In exhaustive mode the ratios are the
/// true PoA/PoS of the cell; in sampled mode they are witnessed bounds and
/// search_complete stays false.
PoaCell poa_cell(int n, const Rational& alpha, const GameConfig& base_cfg, const NeSearchOptions& opts);

std::vector<PoaCell> poa_grid(int n, const std::vector<Rational>& alphas, const GameConfig& base_cfg,
                              const NeSearchOptions& opts);

} // namespace advncg
