#pragma once

#include "advncg/graph.hpp"
#include "advncg/moves.hpp"

#include <cstdint>
#include <iosfwd>

namespace advncg {

enum class ScheduleKind {
    RoundRobin,            // agents 0..n-1 cyclically
    UniformRandom,         // seeded uniform agent choice
    ExhaustiveAdversarial  // depth-first over every agent order, hunting cycles
};

enum class MovePolicy {
    BestResponse,   // the exact best response (skip when not improving)
    FirstImproving  // first improving single move: deletes, buys, swaps,
                    // each scanned lexicographically; falls back to the best
                    // response when no single move improves
};

ScheduleKind parse_schedule(const std::string& name);
MovePolicy parse_policy(const std::string& name);

struct DynamicsRun {
    OwnedMultiGraph start;
    ScheduleKind schedule = ScheduleKind::RoundRobin;
    MovePolicy policy = MovePolicy::BestResponse;
    std::uint64_t seed = 0;        // UniformRandom only
    long long max_steps = 10'000;  // executed moves (linear schedules) or
                                   // expanded states (exhaustive schedule)
};

struct TraceStep {
    long long step;  // 1-based
    NodeId agent;
    std::string kind, detail;
    ExtCost cost_before, cost_after;  // the moving agent's cost
    std::string key_after;            // canonical key of the resulting state
};

struct DynamicsOutcome {
    enum class Kind { Converged, CycleDetected, BudgetExhausted };
    Kind kind = Kind::BudgetExhausted;
    OwnedMultiGraph final_graph = OwnedMultiGraph::empty(1);
    long long steps = 0;
    std::string repeated_key;    // CycleDetected: first revisited state
    long long cycle_length = 0;  // CycleDetected
    std::vector<TraceStep> trace;
};

/// Plays the schedule; an agent with no improving move is skipped. Ends on a
/// full quiet round (Converged: the state is a Nash equilibrium by
/// construction), on a revisited canonical key (CycleDetected), or when the
/// step budget runs out. Every executed move strictly decreases the moving
/// agent's cost. Fixed seed and policy give identical traces.
DynamicsOutcome run_dynamics(const DynamicsRun& run, const GameConfig& cfg);

/// Trace CSV: step,agent,move-kind,move-detail,cost-before,cost-after,key-hash
void write_trace_csv(std::ostream& out, const DynamicsOutcome& outcome);

struct AcyclicityStep {
    NodeId agent;
    std::vector<NodeId> strategy;
};

struct AcyclicityVerdict {
    enum class Kind { ReachesNE, NoNEReachable, Inconclusive };
    Kind kind = Kind::Inconclusive;
    bool exhausted = false;            // reachable set fully explored
    std::vector<AcyclicityStep> path;  // ReachesNE: improving sequence to an NE
    long long states_explored = 0;
};

/// Breadth-first search over the improving-move graph of game states (nodes:
/// canonical keys, arcs: strictly improving strategy replacements). ReachesNE
/// when some improving sequence from g0 ends in a Nash equilibrium,
/// NoNEReachable when the full reachable set holds none, Inconclusive when
/// the expansion budget is hit first.
AcyclicityVerdict probe_weak_acyclicity(const OwnedMultiGraph& g0, const GameConfig& cfg,
                                        long long budget);

} // namespace advncg
