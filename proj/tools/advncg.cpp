// Command-line harness for the adversarial network creation game toolkit:
// cost evaluation, best responses, equilibrium checks, sequential dynamics,
// optimum sweeps, PoA/PoS grids, robustness structure and dominating sets.

#include "advncg/cost.hpp"
#include "advncg/dynamics.hpp"
#include "advncg/error.hpp"
#include "advncg/families.hpp"
#include "advncg/graph.hpp"
#include "advncg/hardness.hpp"
#include "advncg/moves.hpp"
#include "advncg/poa.hpp"
#include "advncg/structure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace advncg;
using nlohmann::json;

namespace {

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Parse: return 2;
        case ErrorKind::BudgetExceeded: return 3;
        default: return 4;
    }
}

long long env_budget(long long fallback) {
    if (const char* v = std::getenv("ADVNCG_BUDGET")) {
        try {
            long long b = std::stoll(v);
            if (b > 0) return b;
        } catch (...) {
        }
        throw Error(ErrorKind::Parse, "ADVNCG_BUDGET must be a positive integer");
    }
    return fallback;
}

// --start/--graph accepts a file path or a family token such as
// DG5, DG5,3, G4, DS4, F5, C6, path3.
OwnedMultiGraph load_graph(const std::string& arg, int cap) {
    if (std::ifstream in(arg); in.good()) return parse_graph_text(in, cap);

    auto parse_token = [&](const std::string& s) -> std::optional<OwnedMultiGraph> {
        auto num_at = [&](size_t pos) -> std::optional<std::pair<int, int>> {
            int n = 0, k = -1;
            size_t i = pos;
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                n = n * 10 + (s[i++] - '0');
            if (i < s.size() && s[i] == ',') {
                ++i;
                k = 0;
                if (i >= s.size()) return std::nullopt;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    k = k * 10 + (s[i++] - '0');
            }
            if (i != s.size()) return std::nullopt;
            return std::make_pair(n, k);
        };
        auto family = [&](FamilyKind kind, size_t pos) -> std::optional<OwnedMultiGraph> {
            auto nk = num_at(pos);
            if (!nk) return std::nullopt;
            auto [n, k] = *nk;
            if (k >= 0 && kind != FamilyKind::PartialDoubledClique) return std::nullopt;
            if (kind == FamilyKind::PartialDoubledClique && k < 0) k = 0;
            return build_family({kind, n, k});
        };
        if (s.rfind("path", 0) == 0) {
            auto nk = num_at(4);
            if (!nk || nk->second >= 0) return std::nullopt;
            int n = nk->first;
            if (n < 2) return std::nullopt;
            std::vector<OwnedEdge> edges;
            for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, i});
            return OwnedMultiGraph::from_edges(n, std::move(edges), cap);
        }
        if (s.rfind("DG", 0) == 0) {
            if (auto nk = num_at(2); nk && nk->second < 0)
                return build_family({FamilyKind::DoubledClique, nk->first, 0});
            return family(FamilyKind::PartialDoubledClique, 2);
        }
        if (s.rfind("DS", 0) == 0) return family(FamilyKind::DoubledStar, 2);
        if (s.rfind("G", 0) == 0 || s.rfind("K", 0) == 0) return family(FamilyKind::Clique, 1);
        if (s.rfind("F", 0) == 0) return family(FamilyKind::Fan, 1);
        if (s.rfind("C", 0) == 0) return family(FamilyKind::Cycle, 1);
        return std::nullopt;
    };
    if (auto g = parse_token(arg)) return *g;
    throw Error(ErrorKind::Parse, "cannot open '" + arg + "' as a file or family token");
}

std::vector<Rational> parse_alpha_grid(const std::string& spec, int n) {
    std::vector<Rational> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "doubling-windows") {
            for (const Rational& a : doubling_window_midpoints(n)) out.push_back(a);
        } else if (tok.rfind("geom:", 0) == 0) {
            // geom:<lo>:<hi>:<count> — geometric grid, rationalized to 6
            // significant digits
            std::string rest = tok.substr(5);
            auto p1 = rest.find(':'), p2 = rest.rfind(':');
            if (p1 == std::string::npos || p2 == p1)
                throw Error(ErrorKind::Parse, "expected geom:<lo>:<hi>:<count>");
            Rational lo = parse_rational(rest.substr(0, p1));
            Rational hi = parse_rational(rest.substr(p1 + 1, p2 - p1 - 1));
            int count = std::stoi(rest.substr(p2 + 1));
            if (count < 2 || !(lo > 0) || !(hi > lo))
                throw Error(ErrorKind::Parse, "geom grid needs 0 < lo < hi and count >= 2");
            double llo = std::log10(static_cast<double>(lo)), lhi = std::log10(static_cast<double>(hi));
            for (int i = 0; i < count; ++i) {
                if (i == 0) {
                    out.push_back(lo);
                } else if (i == count - 1) {
                    out.push_back(hi);
                } else {
                    double v = std::pow(10.0, llo + (lhi - llo) * i / (count - 1));
                    out.push_back(parse_rational(decimal_str(Rational(v), 6)));
                }
            }
        } else {
            out.push_back(parse_rational(tok));
        }
    }
    if (out.empty()) throw Error(ErrorKind::Parse, "empty alpha grid");
    return out;
}

std::string strategy_str(const std::vector<NodeId>& s) {
    std::ostringstream os;
    for (size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
    return os.str();
}

std::string edge_str(const OwnedEdge& e) {
    std::ostringstream os;
    os << e.u << "-" << e.v << " owner " << e.owner;
    return os.str();
}

struct Output {
    bool as_json = false;
    void row(const std::vector<std::pair<std::string, std::string>>& cells) {
        if (as_json) {
            json j;
            for (const auto& [k, v] : cells) j[k] = v;
            std::cout << j.dump() << "\n";
        } else {
            for (size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i].second;
            std::cout << "\n";
        }
    }
    void header(const std::vector<std::string>& names) {
        if (as_json) return;
        for (size_t i = 0; i < names.size(); ++i) std::cout << (i ? "," : "") << names[i];
        std::cout << "\n";
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"adversarial network creation game toolkit"};
    app.require_subcommand(1);

    std::string format = "csv";
    app.add_option("--format", format, "output format: csv|json")->capture_default_str();

    std::string graph_arg, alpha_str = "1", model_str = "adv";
    int cap = 2;
    long long max_steps = 10'000;
    std::uint64_t seed = 1;
    int agent = -1;
    int n_opt = 4;
    std::string grid_str = "1";
    std::string policy_str = "best-response", schedule_str = "round-robin";
    bool sampled = false;
    long long samples = 20'000;
    int dom_m = 1, dom_k = 2;
    bool verify_reduction = false;

    auto add_game_flags = [&](CLI::App* cmd, bool with_graph) {
        if (with_graph) cmd->add_option("graph", graph_arg, "graph file or family token")->required();
        cmd->add_option("--alpha", alpha_str, "edge price (p/q or decimal)")->capture_default_str();
        cmd->add_option("--cap", cap, "max multiplicity per node pair")->capture_default_str();
        cmd->add_option("--model", model_str, "cost model: adv|ncg|kliemann")->capture_default_str();
    };

    auto* c_eval = app.add_subcommand("eval", "per-agent and social cost of a network");
    add_game_flags(c_eval, true);
    c_eval->add_option("--agent", agent, "restrict to one agent");

    auto* c_br = app.add_subcommand("br", "exhaustive best response of one agent");
    add_game_flags(c_br, true);
    c_br->add_option("--agent", agent, "agent id")->required();

    auto* c_ne = app.add_subcommand("ne-check", "Nash equilibrium verdict with witness");
    add_game_flags(c_ne, true);

    auto* c_dyn = app.add_subcommand("dynamics", "sequential improving-move dynamics");
    c_dyn->add_option("--start", graph_arg, "start graph file or family token")->required();
    c_dyn->add_option("--alpha", alpha_str, "edge price")->capture_default_str();
    c_dyn->add_option("--cap", cap, "max multiplicity per node pair")->capture_default_str();
    c_dyn->add_option("--model", model_str, "cost model")->capture_default_str();
    c_dyn->add_option("--policy", policy_str, "best-response|first-improving")->capture_default_str();
    c_dyn->add_option("--schedule", schedule_str, "round-robin|random|adversarial")->capture_default_str();
    c_dyn->add_option("--seed", seed, "random schedule seed")->capture_default_str();
    c_dyn->add_option("--max-steps", max_steps, "step budget")->capture_default_str();

    auto* c_opt = app.add_subcommand("opt-sweep", "brute-force optimum networks over an alpha grid");
    c_opt->add_option("--n", n_opt, "node count")->required();
    c_opt->add_option("--alpha-grid", grid_str,
                      "comma list of rationals, doubling-windows, or geom:<lo>:<hi>:<count>")
        ->required();
    c_opt->add_option("--cap", cap, "max multiplicity per node pair")->capture_default_str();

    auto* c_poa = app.add_subcommand("poa", "price of anarchy/stability grid");
    c_poa->add_option("--n", n_opt, "node count")->required();
    c_poa->add_option("--alpha-grid", grid_str, "alpha grid")->required();
    c_poa->add_option("--cap", cap, "max multiplicity per node pair")->capture_default_str();
    c_poa->add_flag("--sampled", sampled, "sampled mode (witness families + random states)");
    c_poa->add_option("--samples", samples, "random states in sampled mode")->capture_default_str();
    c_poa->add_option("--seed", seed, "sampling seed")->capture_default_str();

    auto* c_struct = app.add_subcommand("structure", "bridges, 2-cut-edges and diameter report");
    c_struct->add_option("graph", graph_arg, "graph file or family token")->required();
    c_struct->add_option("--cap", cap, "max multiplicity per node pair")->capture_default_str();

    auto* c_dom = app.add_subcommand("domset", "minimum m-connected k-dominating set");
    c_dom->add_option("graph", graph_arg, "graph file (owners ignored) or family token")->required();
    c_dom->add_option("--m", dom_m, "connectivity requirement (1 or 2)")->capture_default_str();
    c_dom->add_option("--k", dom_k, "domination requirement")->capture_default_str();
    c_dom->add_flag("--verify-reduction", verify_reduction,
                    "check min 1,2-CDS(g + universal vertex) = gamma(g) + 1");

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.as_json = format == "json";
    if (format != "json" && format != "csv") {
        std::cerr << "error: unknown format '" << format << "'\n";
        return 2;
    }

    try {
        GameConfig cfg;
        cfg.alpha = parse_rational(alpha_str);
        if (cfg.alpha < 0) throw Error(ErrorKind::Parse, "alpha must be nonnegative");
        cfg.model = parse_cost_model(model_str);
        cfg.cap = cap;
        cfg.budget = env_budget(cfg.budget);

        if (app.got_subcommand(c_eval)) {
            OwnedMultiGraph g = load_graph(graph_arg, cap);
            out.header({"kind", "agent", "strategy-size", "edge-cost", "dist-cost", "total", "total-decimal"});
            for (NodeId u = 0; u < g.node_count(); ++u) {
                if (agent >= 0 && u != agent) continue;
                ExtCost total = agent_cost(g, cfg, u);
                ExtCost edge(cfg.alpha * g.strategy_size(u));
                ExtCost dist = total - edge;
                out.row({{"kind", "agent"},
                         {"agent", std::to_string(u)},
                         {"strategy-size", std::to_string(g.strategy_size(u))},
                         {"edge-cost", edge.fraction_str()},
                         {"dist-cost", dist.fraction_str()},
                         {"total", total.fraction_str()},
                         {"total-decimal", total.decimal_str()}});
            }
            if (agent < 0) {
                ExtCost sc = social_cost(g, cfg);
                ExtCost edge(cfg.alpha * g.edge_count());
                out.row({{"kind", "social"},
                         {"agent", ""},
                         {"strategy-size", std::to_string(g.edge_count())},
                         {"edge-cost", edge.fraction_str()},
                         {"dist-cost", (sc - edge).fraction_str()},
                         {"total", sc.fraction_str()},
                         {"total-decimal", sc.decimal_str()}});
            }
        } else if (app.got_subcommand(c_br)) {
            OwnedMultiGraph g = load_graph(graph_arg, cap);
            BestResponseResult br = best_response_exact(g, cfg, agent);
            out.header({"agent", "improving", "ties", "current-cost", "best-cost", "best-cost-decimal",
                        "strategy"});
            out.row({{"agent", std::to_string(agent)},
                     {"improving", br.improving ? "true" : "false"},
                     {"ties", std::to_string(br.ties)},
                     {"current-cost", br.current_cost.fraction_str()},
                     {"best-cost", br.cost.fraction_str()},
                     {"best-cost-decimal", br.cost.decimal_str()},
                     {"strategy", strategy_str(br.strategy)}});
        } else if (app.got_subcommand(c_ne)) {
            OwnedMultiGraph g = load_graph(graph_arg, cap);
            NashResult res = is_nash_equilibrium(g, cfg);
            out.header({"ne", "agent", "strategy", "current-cost", "best-cost", "delta"});
            if (res.is_ne) {
                out.row({{"ne", "true"}, {"agent", ""}, {"strategy", ""}, {"current-cost", ""},
                         {"best-cost", ""}, {"delta", ""}});
            } else {
                const NashWitness& w = *res.witness;
                out.row({{"ne", "false"},
                         {"agent", std::to_string(w.agent)},
                         {"strategy", strategy_str(w.strategy)},
                         {"current-cost", w.current_cost.fraction_str()},
                         {"best-cost", w.best_cost.fraction_str()},
                         {"delta", w.delta().fraction_str()}});
            }
        } else if (app.got_subcommand(c_dyn)) {
            DynamicsRun run{load_graph(graph_arg, cap), parse_schedule(schedule_str),
                            parse_policy(policy_str), seed, max_steps};
            DynamicsOutcome res = run_dynamics(run, cfg);
            if (out.as_json) {
                json j;
                j["outcome"] = res.kind == DynamicsOutcome::Kind::Converged       ? "converged"
                               : res.kind == DynamicsOutcome::Kind::CycleDetected ? "cycle-detected"
                                                                                  : "budget-exhausted";
                j["steps"] = res.steps;
                if (res.kind == DynamicsOutcome::Kind::CycleDetected)
                    j["cycle-length"] = res.cycle_length;
                json steps = json::array();
                for (const auto& t : res.trace) {
                    steps.push_back({{"step", t.step},
                                     {"agent", t.agent},
                                     {"move-kind", t.kind},
                                     {"move-detail", t.detail},
                                     {"cost-before", t.cost_before.fraction_str()},
                                     {"cost-after", t.cost_after.fraction_str()}});
                }
                j["trace"] = std::move(steps);
                std::cout << j.dump() << "\n";
            } else {
                write_trace_csv(std::cout, res);
                std::cout << "# outcome="
                          << (res.kind == DynamicsOutcome::Kind::Converged       ? "converged"
                              : res.kind == DynamicsOutcome::Kind::CycleDetected ? "cycle-detected"
                                                                                 : "budget-exhausted")
                          << " steps=" << res.steps;
                if (res.kind == DynamicsOutcome::Kind::CycleDetected)
                    std::cout << " cycle-length=" << res.cycle_length;
                std::cout << "\n";
            }
        } else if (app.got_subcommand(c_opt)) {
            auto grid = parse_alpha_grid(grid_str, n_opt);
            PairSpace ps(n_opt);
            out.header({"alpha", "opt-cost", "opt-cost-decimal", "edge-count", "minimizer-count",
                        "family-label"});
            for (const Rational& a : grid) {
                OptimumResult opt = optimum_bruteforce(n_opt, a, cap, env_budget(1'000'000));
                std::vector<std::string> labels;
                int emin = 1 << 30, emax = 0;
                for (const MultVec& m : opt.minimizers) {
                    emin = std::min(emin, total_edges(m));
                    emax = std::max(emax, total_edges(m));
                    std::string l = classify_family(ps, m);
                    if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
                }
                std::sort(labels.begin(), labels.end());
                std::string label;
                for (size_t i = 0; i < labels.size(); ++i) label += (i ? "|" : "") + labels[i];
                out.row({{"alpha", fraction_str(a)},
                         {"opt-cost", opt.cost.fraction_str()},
                         {"opt-cost-decimal", opt.cost.decimal_str()},
                         {"edge-count", emin == emax ? std::to_string(emin)
                                                     : std::to_string(emin) + "-" + std::to_string(emax)},
                         {"minimizer-count", std::to_string(opt.minimizers.size())},
                         {"family-label", label}});
            }
        } else if (app.got_subcommand(c_poa)) {
            auto grid = parse_alpha_grid(grid_str, n_opt);
            NeSearchOptions opts;
            opts.state_budget = env_budget(opts.state_budget);
            opts.sampled = sampled;
            opts.samples = samples;
            opts.seed = seed;
            out.header({"n", "alpha", "opt-cost", "worst-ne-cost", "best-ne-cost", "poa", "poa-decimal",
                        "pos", "pos-decimal", "ne-count", "search-complete"});
            for (const auto& cell : poa_grid(n_opt, grid, cfg, opts)) {
                bool r = cell.has_ratios();
                out.row({{"n", std::to_string(cell.n)},
                         {"alpha", fraction_str(cell.alpha)},
                         {"opt-cost", cell.opt_cost.fraction_str()},
                         {"worst-ne-cost", cell.worst_ne_cost.fraction_str()},
                         {"best-ne-cost", cell.best_ne_cost.fraction_str()},
                         {"poa", r ? fraction_str(cell.poa()) : ""},
                         {"poa-decimal", r ? decimal_str(cell.poa()) : ""},
                         {"pos", r ? fraction_str(cell.pos()) : ""},
                         {"pos-decimal", r ? decimal_str(cell.pos()) : ""},
                         {"ne-count", std::to_string(cell.ne_count)},
                         {"search-complete", cell.search_complete ? "true" : "false"}});
            }
        } else if (app.got_subcommand(c_struct)) {
            OwnedMultiGraph g = load_graph(graph_arg, cap);
            StructureReport rep = analyze_structure(g);
            out.header({"kind", "value"});
            out.row({{"kind", "nodes"}, {"value", std::to_string(g.node_count())}});
            out.row({{"kind", "edges"}, {"value", std::to_string(g.edge_count())}});
            out.row({{"kind", "two-edge-connected"}, {"value", rep.two_edge_connected ? "true" : "false"}});
            out.row({{"kind", "diameter"}, {"value", rep.diam.fraction_str()}});
            out.row({{"kind", "worst-post-deletion-diameter"},
                     {"value", rep.worst_post_deletion_diameter.fraction_str()}});
            out.row({{"kind", "bridge-count"}, {"value", std::to_string(rep.bridge_edges.size())}});
            out.row({{"kind", "two-cut-edge-count"}, {"value", std::to_string(rep.two_cut.size())}});
            for (const auto& e : rep.bridge_edges) out.row({{"kind", "bridge"}, {"value", edge_str(e)}});
            for (const auto& e : rep.two_cut) out.row({{"kind", "two-cut-edge"}, {"value", edge_str(e)}});
        } else if (app.got_subcommand(c_dom)) {
            SimpleGraph g = simple_from_multigraph(load_graph(graph_arg, 1 << 20));
            CdsResult res = min_mk_cds_bruteforce(g, dom_m, dom_k);
            out.header({"kind", "value"});
            out.row({{"kind", "min-set"}, {"value", strategy_str(res.nodes)}});
            out.row({{"kind", "size"}, {"value", std::to_string(res.size)}});
            if (verify_reduction) {
                ReductionCheck check = verify_reduction_identity(g);
                out.row({{"kind", "gamma"}, {"value", std::to_string(check.gamma)}});
                out.row({{"kind", "cds-universal"}, {"value", std::to_string(check.cds_size)}});
                out.row({{"kind", "identity"}, {"value", check.holds ? "true" : "false"}});
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
