#include "advncg/families.hpp"
#include "advncg/error.hpp"

#include <algorithm>
#include <string>

namespace advncg {

namespace {

long long choose2(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

void require(bool ok, const std::string& msg) {
    if (!ok) throw Error(ErrorKind::InvalidArgument, msg);
}

} // namespace

OwnedMultiGraph build_family(const FamilySpec& spec) {
    std::vector<OwnedEdge> edges;
    int n = spec.n;
    switch (spec.kind) {
        case FamilyKind::DoubledClique:
            require(n >= 1, "doubled clique needs n >= 1");
            for (NodeId u = 0; u < n; ++u)
                for (NodeId v = u + 1; v < n; ++v) {
                    edges.push_back({u, v, u});
                    edges.push_back({u, v, v});
                }
            return OwnedMultiGraph::from_edges(n, std::move(edges), 2);

        case FamilyKind::Clique:
        case FamilyKind::PartialDoubledClique: {
            int k = spec.kind == FamilyKind::Clique ? 0 : spec.k;
            require(n >= 1, "clique needs n >= 1");
            require(k >= 0 && k <= choose2(n), "doubled-pair count must be in [0, C(n,2)]");
            int doubled = 0;
            for (NodeId u = 0; u < n; ++u)
                for (NodeId v = u + 1; v < n; ++v) {
                    edges.push_back({u, v, u});
                    if (doubled < k) {
                        edges.push_back({u, v, v});
                        ++doubled;
                    }
                }
            return OwnedMultiGraph::from_edges(n, std::move(edges), 2);
        }

        case FamilyKind::DoubledStar:
            require(n >= 2, "doubled star needs n >= 2");
            for (NodeId leaf = 1; leaf < n; ++leaf) {
                edges.push_back({0, leaf, 0});
                edges.push_back({0, leaf, 0});
            }
            return OwnedMultiGraph::from_edges(n, std::move(edges), 2);

        case FamilyKind::Fan:
            require(n >= 3 && n % 2 == 1, "fan needs odd n >= 3");
            for (NodeId a = 1; a + 1 < n; a += 2) {
                NodeId b = a + 1;
                edges.push_back({0, a, a});
                edges.push_back({0, b, b});
                edges.push_back({a, b, a});
            }
            return OwnedMultiGraph::from_edges(n, std::move(edges), 2);

        case FamilyKind::Cycle:
            require(n >= 3, "cycle needs n >= 3");
            for (NodeId u = 0; u < n; ++u)
                edges.push_back({u, (u + 1) % n, u});
            return OwnedMultiGraph::from_edges(n, std::move(edges), 2);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family kind");
}

ExtCost partial_doubled_clique_cost(int n, int k, const Rational& alpha) {
    require(n >= 2, "closed form needs n >= 2");
    long long pairs = choose2(n);
    require(k >= 0 && k <= pairs, "doubled-pair count must be in [0, C(n,2)]");
    long long e = pairs + k;
    Rational cost = alpha * e;
    cost += static_cast<long long>(n) * (n - 1);
    cost += Rational(2 * (pairs - k), e);
    return ExtCost(cost);
}

std::string classify_family(const PairSpace& ps, const MultVec& m) {
    int n = ps.n();
    int P = ps.pair_count();
    std::vector<int> degree(static_cast<size_t>(n), 0);  // support degree
    bool complete = true;
    int max_mult = 0, doubled = 0, present = 0;
    for (int p = 0; p < P; ++p) {
        int mu = m[static_cast<size_t>(p)];
        max_mult = std::max(max_mult, mu);
        if (mu == 0) {
            complete = false;
            continue;
        }
        ++present;
        if (mu >= 2) ++doubled;
        auto [a, b] = ps.nodes(p);
        ++degree[static_cast<size_t>(a)];
        ++degree[static_cast<size_t>(b)];
    }

    if (complete && max_mult <= 2) {
        if (doubled == P) return "DG" + std::to_string(n);
        if (doubled == 0) return "G" + std::to_string(n);
        return "DG" + std::to_string(n) + "," + std::to_string(doubled);
    }

    // doubled star: some hub connected to everyone by double edges, nothing else
    if (n >= 2) {
        for (NodeId h = 0; h < n; ++h) {
            bool ok = true;
            for (int p = 0; p < P && ok; ++p) {
                auto [a, b] = ps.nodes(p);
                bool touches_hub = a == h || b == h;
                int mu = m[static_cast<size_t>(p)];
                ok = touches_hub ? mu == 2 : mu == 0;
            }
            if (ok) return "DS" + std::to_string(n);
        }
    }

    // simple cycle through all nodes: every degree 2, all single, connected
    if (n >= 3 && max_mult == 1 && present == n &&
        std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; })) {
        SupportMasks masks;
        masks.build(ps, m);
        if (masks.unreachable_count(n, 0) == 0) return "C" + std::to_string(n);
    }

    // fan: hub adjacent to all rim nodes (single), rim a perfect matching
    // closing triangles with the hub
    if (n >= 3 && n % 2 == 1 && max_mult == 1) {
        for (NodeId h = 0; h < n; ++h) {
            if (degree[static_cast<size_t>(h)] != n - 1) continue;
            bool ok = true;
            int rim_edges = 0;
            for (int p = 0; p < P && ok; ++p) {
                auto [a, b] = ps.nodes(p);
                int mu = m[static_cast<size_t>(p)];
                if (a == h || b == h) {
                    ok = mu == 1;
                } else if (mu == 1) {
                    ++rim_edges;
                }
            }
            if (!ok) continue;
            bool rim_matching = true;
            for (NodeId v = 0; v < n && rim_matching; ++v)
                if (v != h) rim_matching = degree[static_cast<size_t>(v)] == 2;
            if (rim_matching && rim_edges == (n - 1) / 2) return "F" + std::to_string(n);
        }
    }
    return "other";
}

OwnedMultiGraph with_canonical_ownership(const PairSpace& ps, const MultVec& m, int cap) {
    std::vector<OwnedEdge> edges;
    for (int p = 0; p < ps.pair_count(); ++p) {
        auto [a, b] = ps.nodes(p);
        for (int i = 0; i < m[static_cast<size_t>(p)]; ++i)
            edges.push_back({a, b, i % 2 == 0 ? a : b});
    }
    return OwnedMultiGraph::from_edges(ps.n(), std::move(edges), cap);
}

namespace {

struct CostTable {
    PairSpace ps;
    std::vector<MultVec> vecs;
    std::vector<DeletionSum> sums;  // social distance sums; edges==0 entries skipped

    CostTable(int n, int cap, long long budget) : ps(n) {
        long long space = 1;
        for (int p = 0; p < ps.pair_count(); ++p) {
            space *= cap + 1;
            if (space > budget)
                throw Error(ErrorKind::BudgetExceeded,
                            "optimum enumeration exceeds budget of " + std::to_string(budget));
        }
        MultVec m(static_cast<size_t>(ps.pair_count()), 0);
        while (true) {
            vecs.push_back(m);
            if (total_edges(m) == 0) {
                sums.push_back(DeletionSum{false, 0, 0});
            } else {
                sums.push_back(deletion_social_sum(ps, m));
            }
            size_t i = 0;
            for (; i < m.size(); ++i) {
                if (m[i] < cap) {
                    ++m[i];
                    std::fill(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(i), 0);
                    break;
                }
            }
            if (i == m.size()) break;
        }
    }

    ExtCost cost_at(size_t idx, const Rational& alpha) const {
        const DeletionSum& s = sums[idx];
        if (!s.finite) return ExtCost::infinity();
        Rational c = alpha * s.edges;
        c += Rational(BigInt(s.total), BigInt(s.edges));
        return ExtCost(std::move(c));
    }
};

OptimumResult optimum_over_table(const CostTable& table, const Rational& alpha) {
    OptimumResult out;
    out.cost = ExtCost::infinity();
    out.graphs_scanned = static_cast<long long>(table.vecs.size());
    for (size_t i = 0; i < table.vecs.size(); ++i) {
        ExtCost c = table.cost_at(i, alpha);
        if (c < out.cost) {
            out.cost = c;
            out.minimizers.clear();
        }
        if (c == out.cost && c.is_finite()) out.minimizers.push_back(table.vecs[i]);
    }
    return out;
}

} // namespace

OptimumResult optimum_bruteforce(int n, const Rational& alpha, int cap, long long budget) {
    require(n >= 1, "optimum search needs n >= 1");
    if (n == 1) {
        OptimumResult out;
        out.cost = ExtCost(0);
        out.minimizers.push_back({});
        out.graphs_scanned = 1;
        return out;
    }
    CostTable table(n, cap, budget);
    return optimum_over_table(table, alpha);
}

MonotonicityResult check_edge_monotonicity(int n, const std::vector<Rational>& grid, int cap,
                                           long long budget) {
    require(n >= 2, "monotonicity check needs n >= 2");
    std::vector<Rational> alphas(grid);
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

    CostTable table(n, cap, budget);
    MonotonicityResult res;
    for (const Rational& a : alphas) {
        OptimumResult opt = optimum_over_table(table, a);
        MonotonicityRow row;
        row.alpha = a;
        row.opt_cost = opt.cost;
        row.minimizer_count = static_cast<long long>(opt.minimizers.size());
        row.min_edges = row.max_edges = opt.minimizers.empty() ? 0 : total_edges(opt.minimizers.front());
        for (const MultVec& m : opt.minimizers) {
            int e = total_edges(m);
            row.min_edges = std::min(row.min_edges, e);
            row.max_edges = std::max(row.max_edges, e);
        }
        res.table.push_back(std::move(row));
    }
    for (size_t i = 0; i + 1 < res.table.size(); ++i)
        if (res.table[i].max_edges < res.table[i + 1].min_edges) res.monotone = false;
    return res;
}

std::vector<Rational> doubling_window_midpoints(int n) {
    require(n >= 2, "windows need n >= 2");
    long long pairs = choose2(n);
    std::vector<Rational> out;
    Rational top(2LL * n * (n - 1));
    for (long long k = pairs - 1; k >= 1; --k) {
        Rational lo = top / Rational((pairs + k) * (pairs + k + 1));
        Rational hi = top / Rational((pairs + k) * (pairs + k - 1));
        out.push_back((lo + hi) / 2);
    }
    return out;
}

} // namespace advncg
