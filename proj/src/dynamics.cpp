#include "advncg/dynamics.hpp"
#include "advncg/cost.hpp"
#include "advncg/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace advncg {

ScheduleKind parse_schedule(const std::string& name) {
    if (name == "round-robin" || name == "rr") return ScheduleKind::RoundRobin;
    if (name == "random" || name == "uniform-random") return ScheduleKind::UniformRandom;
    if (name == "adversarial" || name == "exhaustive-adversarial")
        return ScheduleKind::ExhaustiveAdversarial;
    throw Error(ErrorKind::Parse, "unknown schedule: '" + name + "'");
}

MovePolicy parse_policy(const std::string& name) {
    if (name == "best-response" || name == "br") return MovePolicy::BestResponse;
    if (name == "first-improving" || name == "fi") return MovePolicy::FirstImproving;
    throw Error(ErrorKind::Parse, "unknown move policy: '" + name + "'");
}

namespace {

struct ChosenMove {
    Move move;
    OwnedMultiGraph after;
    ExtCost cost_before, cost_after;
};

// The single move an agent plays under the policy, or nullopt when the agent
// has no improving move at all.
std::optional<ChosenMove> policy_move(const OwnedMultiGraph& g, const GameConfig& cfg, NodeId u,
                                      MovePolicy policy) {
    ExtCost current = agent_cost(g, cfg, u);

    if (policy == MovePolicy::FirstImproving) {
        StrategyVector sv = strategies_of(g);
        std::vector<NodeId> owned = sv.agents[static_cast<size_t>(u)];
        owned.erase(std::unique(owned.begin(), owned.end()), owned.end());  // distinct targets

        auto try_move = [&](const Move& m) -> std::optional<ChosenMove> {
            OwnedMultiGraph after = apply_move(g, u, m, cfg.cap);
            ExtCost c = agent_cost(after, cfg, u);
            if (c < current) return ChosenMove{m, std::move(after), current, c};
            return std::nullopt;
        };

        for (NodeId t : owned)
            if (auto m = try_move(DeleteMove{t})) return m;
        for (NodeId t = 0; t < g.node_count(); ++t) {
            if (t == u || g.multiplicity(u, t) >= cfg.cap) continue;
            if (auto m = try_move(BuyMove{t})) return m;
        }
        for (NodeId from : owned) {
            for (NodeId to = 0; to < g.node_count(); ++to) {
                if (to == u || to == from) continue;
                if (g.multiplicity(u, to) >= cfg.cap) continue;
                if (auto m = try_move(SwapMove{from, to})) return m;
            }
        }
        // no single move improves; a multi-move might (buy/delete combinations
        // are covered by the single checks, multi-swaps are not)
    }

    BestResponseResult br = best_response_exact(g, cfg, u);
    if (!br.improving) return std::nullopt;
    OwnedMultiGraph after = apply_move(g, u, ReplaceMove{br.strategy}, cfg.cap);
    return ChosenMove{ReplaceMove{br.strategy}, std::move(after), br.current_cost, br.cost};
}

DynamicsOutcome run_linear(const DynamicsRun& run, const GameConfig& cfg) {
    DynamicsOutcome out;
    out.final_graph = run.start;
    int n = run.start.node_count();
    std::map<std::string, long long> seen{{canonical_key(run.start), 0}};
    std::mt19937_64 rng(run.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);

    int quiet = 0;  // consecutive agents with no improving move since the last move
    std::vector<bool> known_quiet(static_cast<size_t>(n), false);
    NodeId next_rr = 0;

    while (true) {
        // convergence: a full quiet round (round-robin) or all agents known
        // quiet in the unchanged state (random schedule)
        if (run.schedule == ScheduleKind::RoundRobin && quiet >= n) {
            out.kind = DynamicsOutcome::Kind::Converged;
            return out;
        }
        if (run.schedule == ScheduleKind::UniformRandom &&
            std::all_of(known_quiet.begin(), known_quiet.end(), [](bool b) { return b; })) {
            out.kind = DynamicsOutcome::Kind::Converged;
            return out;
        }

        NodeId u;
        if (run.schedule == ScheduleKind::RoundRobin) {
            u = next_rr;
            next_rr = (next_rr + 1) % n;
        } else {
            u = static_cast<NodeId>(pick(rng));
            if (known_quiet[static_cast<size_t>(u)]) continue;
        }

        auto chosen = policy_move(out.final_graph, cfg, u, run.policy);
        if (!chosen) {
            ++quiet;
            known_quiet[static_cast<size_t>(u)] = true;
            continue;
        }
        if (out.steps >= run.max_steps) {
            out.kind = DynamicsOutcome::Kind::BudgetExhausted;
            return out;
        }
        ++out.steps;
        quiet = 0;
        std::fill(known_quiet.begin(), known_quiet.end(), false);
        out.final_graph = std::move(chosen->after);
        std::string key = canonical_key(out.final_graph);
        out.trace.push_back({out.steps, u, move_kind(chosen->move), move_detail(chosen->move),
                             chosen->cost_before, chosen->cost_after, key});
        auto [it, fresh] = seen.emplace(key, out.steps);
        if (!fresh) {
            out.kind = DynamicsOutcome::Kind::CycleDetected;
            out.repeated_key = key;
            out.cycle_length = out.steps - it->second;
            return out;
        }
    }
}

// Depth-first search over which agent moves next (each playing its policy
// move), exploring every choice order. Reports the first improving-move
// cycle found; when the whole reachable choice tree is cycle-free, every
// maximal path ends in an equilibrium and the first one encountered is
// returned as Converged.
DynamicsOutcome run_exhaustive(const DynamicsRun& run, const GameConfig& cfg) {
    DynamicsOutcome out;
    out.final_graph = run.start;

    struct Frame {
        OwnedMultiGraph state;
        std::string key;
        NodeId next_agent = 0;
        bool any_move = false;
    };
    std::vector<Frame> stack;
    stack.push_back({run.start, canonical_key(run.start), 0, false});
    std::map<std::string, long long> on_path{{stack.back().key, 0}};
    std::map<std::string, bool> explored;
    std::vector<TraceStep> path_trace;
    long long expansions = 0;

    bool sink_found = false;
    OwnedMultiGraph sink_graph = run.start;
    std::vector<TraceStep> sink_trace;

    while (!stack.empty()) {
        Frame& top = stack.back();
        int n = top.state.node_count();

        if (top.next_agent == 0) {
            if (expansions >= run.max_steps) {
                out.kind = DynamicsOutcome::Kind::BudgetExhausted;
                out.steps = expansions;
                out.final_graph = top.state;
                out.trace = path_trace;
                return out;
            }
            ++expansions;
        }

        bool descended = false;
        while (top.next_agent < n) {
            NodeId u = top.next_agent++;
            auto chosen = policy_move(top.state, cfg, u, run.policy);
            if (!chosen) continue;
            top.any_move = true;
            std::string key = canonical_key(chosen->after);
            long long depth = static_cast<long long>(path_trace.size()) + 1;
            if (auto it = on_path.find(key); it != on_path.end()) {
                out.kind = DynamicsOutcome::Kind::CycleDetected;
                out.repeated_key = key;
                out.cycle_length = depth - it->second;
                path_trace.push_back({depth, u, move_kind(chosen->move), move_detail(chosen->move),
                                      chosen->cost_before, chosen->cost_after, key});
                out.trace = std::move(path_trace);
                out.steps = depth;
                out.final_graph = chosen->after;
                return out;
            }
            if (explored.count(key)) continue;  // cycle-free subtree already done
            path_trace.push_back({depth, u, move_kind(chosen->move), move_detail(chosen->move),
                                  chosen->cost_before, chosen->cost_after, key});
            on_path.emplace(key, depth);
            stack.push_back({chosen->after, std::move(key), 0, false});
            descended = true;
            break;
        }
        if (descended) continue;

        if (!top.any_move && !sink_found) {  // equilibrium leaf; remember the first
            sink_found = true;
            sink_graph = top.state;
            sink_trace = path_trace;
        }
        explored[top.key] = true;
        on_path.erase(top.key);
        stack.pop_back();
        if (!path_trace.empty()) path_trace.pop_back();
    }

    out.kind = DynamicsOutcome::Kind::Converged;
    out.final_graph = sink_graph;
    out.trace = std::move(sink_trace);
    out.steps = static_cast<long long>(out.trace.size());
    return out;
}

} // namespace

DynamicsOutcome run_dynamics(const DynamicsRun& run, const GameConfig& cfg) {
    if (run.max_steps < 0) throw Error(ErrorKind::InvalidArgument, "step budget must be >= 0");
    if (run.schedule == ScheduleKind::ExhaustiveAdversarial) return run_exhaustive(run, cfg);
    return run_linear(run, cfg);
}

void write_trace_csv(std::ostream& out, const DynamicsOutcome& outcome) {
    out << "step,agent,move-kind,move-detail,cost-before,cost-after,canonical-key-hash\n";
    for (const auto& t : outcome.trace) {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char c : t.key_after) {
            h ^= c;
            h *= 1099511628211ull;
        }
        std::ostringstream hs;
        hs << std::hex << h;
        out << t.step << "," << t.agent << "," << t.kind << "," << t.detail << ","
            << t.cost_before.fraction_str() << "," << t.cost_after.fraction_str() << "," << hs.str()
            << "\n";
    }
}

AcyclicityVerdict probe_weak_acyclicity(const OwnedMultiGraph& g0, const GameConfig& cfg,
                                        long long budget) {
    AcyclicityVerdict verdict;
    struct Parent {
        std::string key;
        AcyclicityStep step;
    };
    std::map<std::string, Parent> parents;  // key -> how it was reached
    std::map<std::string, OwnedMultiGraph> frontier_states;

    std::string start_key = canonical_key(g0);
    parents.emplace(start_key, Parent{"", {}});
    std::deque<std::string> queue{start_key};
    frontier_states.emplace(start_key, g0);

    auto reconstruct = [&](const std::string& key) {
        std::vector<AcyclicityStep> path;
        std::string cur = key;
        while (cur != start_key) {
            const Parent& p = parents.at(cur);
            path.push_back(p.step);
            cur = p.key;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    while (!queue.empty()) {
        if (verdict.states_explored >= budget) {
            verdict.kind = AcyclicityVerdict::Kind::Inconclusive;
            verdict.exhausted = false;
            return verdict;
        }
        std::string key = queue.front();
        queue.pop_front();
        OwnedMultiGraph g = frontier_states.at(key);
        frontier_states.erase(key);
        ++verdict.states_explored;

        bool any_improving = false;
        for (NodeId u = 0; u < g.node_count(); ++u) {
            for (auto& strat : improving_strategies(g, cfg, u)) {
                any_improving = true;
                OwnedMultiGraph next = apply_move(g, u, ReplaceMove{strat}, cfg.cap);
                std::string nkey = canonical_key(next);
                if (parents.emplace(nkey, Parent{key, {u, strat}}).second) {
                    queue.push_back(nkey);
                    frontier_states.emplace(nkey, std::move(next));
                }
            }
        }
        if (!any_improving) {  // g is a Nash equilibrium
            verdict.kind = AcyclicityVerdict::Kind::ReachesNE;
            verdict.exhausted = true;
            verdict.path = reconstruct(key);
            return verdict;
        }
    }
    verdict.kind = AcyclicityVerdict::Kind::NoNEReachable;
    verdict.exhausted = true;
    return verdict;
}

} // namespace advncg
