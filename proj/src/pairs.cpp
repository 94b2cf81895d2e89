#include "advncg/pairs.hpp"
#include "advncg/error.hpp"

#include <bit>

namespace advncg {

PairSpace::PairSpace(int n) : n_(n), index_(static_cast<size_t>(n) * static_cast<size_t>(n), -1) {
    if (n < 1 || n > 30) throw Error(ErrorKind::InvalidArgument, "PairSpace supports 1 <= n <= 30");
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            index_[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)] =
                static_cast<int>(pairs_.size());
            index_[static_cast<size_t>(v) * static_cast<size_t>(n) + static_cast<size_t>(u)] =
                static_cast<int>(pairs_.size());
            pairs_.emplace_back(u, v);
        }
    }
}

int PairSpace::index(NodeId u, NodeId v) const {
    int idx = index_[static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v)];
    if (idx < 0) throw Error(ErrorKind::InvalidTarget, "no pair index for (u,u)");
    return idx;
}

MultVec multiplicities_of(const PairSpace& ps, const OwnedMultiGraph& g) {
    MultVec m(static_cast<size_t>(ps.pair_count()), 0);
    for (const auto& e : g.edges()) ++m[static_cast<size_t>(ps.index(e.u, e.v))];
    return m;
}

int total_edges(const MultVec& m) {
    int t = 0;
    for (auto x : m) t += x;
    return t;
}

void SupportMasks::build(const PairSpace& ps, const MultVec& m) {
    for (int i = 0; i < ps.n(); ++i) adj[i] = 0;
    for (int p = 0; p < ps.pair_count(); ++p) {
        if (m[static_cast<size_t>(p)] > 0) {
            auto [u, v] = ps.nodes(p);
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
    }
}

long long SupportMasks::delta_sum(int n, NodeId src, NodeId skip_u, NodeId skip_v) const {
    const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    std::uint32_t seen = 1u << src;
    std::uint32_t frontier = seen;
    long long sum = 0;
    int depth = 0;
    while (frontier) {
        ++depth;
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            int x = std::countr_zero(f);
            f &= f - 1;
            std::uint32_t nb = adj[x];
            if (x == skip_u) nb &= ~(1u << skip_v);
            else if (x == skip_v) nb &= ~(1u << skip_u);
            next |= nb;
        }
        next &= ~seen;
        if (!next) break;
        sum += static_cast<long long>(depth) * std::popcount(next);
        seen |= next;
        frontier = next;
    }
    return seen == all ? sum : -1;
}

int SupportMasks::unreachable_count(int n, NodeId src, NodeId skip_u, NodeId skip_v) const {
    std::uint32_t seen = 1u << src;
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            int x = std::countr_zero(f);
            f &= f - 1;
            std::uint32_t nb = adj[x];
            if (x == skip_u) nb &= ~(1u << skip_v);
            else if (x == skip_v) nb &= ~(1u << skip_u);
            next |= nb;
        }
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return n - std::popcount(seen);
}

int SupportMasks::eccentricity(int n, NodeId src, NodeId skip_u, NodeId skip_v) const {
    const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    std::uint32_t seen = 1u << src;
    std::uint32_t frontier = seen;
    int depth = 0, ecc = 0;
    while (frontier) {
        ++depth;
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            int x = std::countr_zero(f);
            f &= f - 1;
            std::uint32_t nb = adj[x];
            if (x == skip_u) nb &= ~(1u << skip_v);
            else if (x == skip_v) nb &= ~(1u << skip_u);
            next |= nb;
        }
        next &= ~seen;
        if (!next) break;
        ecc = depth;
        seen |= next;
        frontier = next;
    }
    return seen == all ? ecc : -1;
}

ExtCost DeletionSum::to_cost() const {
    if (!finite) return ExtCost::infinity();
    return ExtCost(Rational(BigInt(total), BigInt(edges)));
}

DeletionSum deletion_delta_sum(const PairSpace& ps, const MultVec& m, NodeId src) {
    DeletionSum out;
    out.edges = total_edges(m);
    if (out.edges == 0) throw Error(ErrorKind::Precondition, "deletion sum needs |E| >= 1");
    SupportMasks masks;
    masks.build(ps, m);
    long long base = masks.delta_sum(ps.n(), src);
    if (base < 0) {  // already disconnected: every post-deletion sum is infinite
        out.finite = false;
        return out;
    }
    for (int p = 0; p < ps.pair_count(); ++p) {
        int mult = m[static_cast<size_t>(p)];
        if (mult == 0) continue;
        if (mult >= 2) {
            out.total += static_cast<long long>(mult) * base;
        } else {
            auto [a, b] = ps.nodes(p);
            long long d = masks.delta_sum(ps.n(), src, a, b);
            if (d < 0) {
                out.finite = false;
                return out;
            }
            out.total += d;
        }
    }
    return out;
}

DeletionSum deletion_social_sum(const PairSpace& ps, const MultVec& m) {
    DeletionSum out;
    out.edges = total_edges(m);
    if (out.edges == 0) throw Error(ErrorKind::Precondition, "deletion sum needs |E| >= 1");
    SupportMasks masks;
    masks.build(ps, m);
    int n = ps.n();
    long long base = 0;
    for (NodeId u = 0; u < n; ++u) {
        long long d = masks.delta_sum(n, u);
        if (d < 0) {
            out.finite = false;
            return out;
        }
        base += d;
    }
    for (int p = 0; p < ps.pair_count(); ++p) {
        int mult = m[static_cast<size_t>(p)];
        if (mult == 0) continue;
        if (mult >= 2) {
            out.total += static_cast<long long>(mult) * base;
        } else {
            auto [a, b] = ps.nodes(p);
            for (NodeId u = 0; u < n; ++u) {
                long long d = masks.delta_sum(n, u, a, b);
                if (d < 0) {
                    out.finite = false;
                    return out;
                }
                out.total += d;
            }
        }
    }
    return out;
}

DeletionSum deletion_unreachable_sum(const PairSpace& ps, const MultVec& m, NodeId src) {
    DeletionSum out;
    out.edges = total_edges(m);
    if (out.edges == 0) throw Error(ErrorKind::Precondition, "deletion sum needs |E| >= 1");
    SupportMasks masks;
    masks.build(ps, m);
    int base = masks.unreachable_count(ps.n(), src);
    for (int p = 0; p < ps.pair_count(); ++p) {
        int mult = m[static_cast<size_t>(p)];
        if (mult == 0) continue;
        if (mult >= 2) {
            out.total += static_cast<long long>(mult) * base;
        } else {
            auto [a, b] = ps.nodes(p);
            out.total += masks.unreachable_count(ps.n(), src, a, b);
        }
    }
    return out;
}

long long plain_delta_sum(const PairSpace& ps, const MultVec& m, NodeId src) {
    SupportMasks masks;
    masks.build(ps, m);
    return masks.delta_sum(ps.n(), src);
}

} // namespace advncg
