#pragma once

#include "advncg/graph.hpp"
#include "advncg/pairs.hpp"

namespace advncg {

/// Canonical network families.
///   DoubledClique ("DGn")         every pair doubled, each agent owns one
///                                 instance toward every other agent
///   PartialDoubledClique ("DGn,k") clique with the k lexicographically first
///                                 pairs doubled; doubled pairs owned one
///                                 instance per endpoint, singles by the
///                                 smaller endpoint
///   Clique ("Gn")                 = PartialDoubledClique with k = 0
///   DoubledStar ("DSn")           star with doubled connections; the center
///                                 owns both instances (leaf-owned instances
///                                 admit an improving swap, so this is the
///                                 ownership under which the family can be
///                                 an equilibrium)
///   Fan ("Fn")                    triangles sharing hub 0; odd n >= 3
///   Cycle ("Cn")                  node i owns the edge to (i+1) mod n
enum class FamilyKind { DoubledClique, PartialDoubledClique, Clique, DoubledStar, Fan, Cycle };

struct FamilySpec {
    FamilyKind kind;
    int n = 0;
    int k = 0;  // PartialDoubledClique only
};

OwnedMultiGraph build_family(const FamilySpec& spec);

/// Closed-form social cost of the k-doubled clique:
/// alpha*|E| + n(n-1) + 2(C(n,2)-k)/(C(n,2)+k), |E| = C(n,2)+k.
ExtCost partial_doubled_clique_cost(int n, int k, const Rational& alpha);

/// Labels a multiplicity vector as one of the known families ("DG4", "DG4,2",
/// "G4", "DS4", "F5", "C4") or "other". Label-sensitive, not isomorphism-aware,
/// except DS/F/C which match any hub/cycle labeling.
std::string classify_family(const PairSpace& ps, const MultVec& m);

/// Canonical ownership for an ownership-free multiset: the smaller endpoint
/// owns the first instance, endpoints alternate for parallels.
OwnedMultiGraph with_canonical_ownership(const PairSpace& ps, const MultVec& m, int cap);

struct OptimumResult {
    ExtCost cost;                 // minimum social cost (Adv-NCG)
    std::vector<MultVec> minimizers;
    long long graphs_scanned = 0;
};

/// Exhaustive optimum over all edge multisets with pair multiplicities up to
/// cap (ownership-free; social cost is ownership-invariant). Throws
/// Error{BudgetExceeded} when (cap+1)^C(n,2) exceeds the budget.
OptimumResult optimum_bruteforce(int n, const Rational& alpha, int cap, long long budget = 1'000'000);

struct MonotonicityRow {
    Rational alpha;
    ExtCost opt_cost;
    int min_edges = 0, max_edges = 0;  // over all minimizers
    long long minimizer_count = 0;
};

struct MonotonicityResult {
    bool monotone = true;  // max_edges at the smaller alpha >= min_edges at the larger
    std::vector<MonotonicityRow> table;
};

/// Optimum edge counts along an ascending alpha grid; asserts that they do
/// not increase (comparing the max count among minimizers at the smaller
/// alpha with the min count at the larger, which is tie-safe).
MonotonicityResult check_edge_monotonicity(int n, const std::vector<Rational>& grid, int cap,
                                           long long budget = 1'000'000);

/// Midpoints of the alpha windows in which each k-doubled clique is optimal,
/// ordered by descending k (ascending alpha).
std::vector<Rational> doubling_window_midpoints(int n);

} // namespace advncg
