#pragma once

#include "advncg/graph.hpp"

#include <cstdint>
#include <vector>

namespace advncg {

/// Triangular indexing of unordered node pairs, plus integer BFS kernels on
/// multiplicity vectors. This is the inner loop of every enumeration: all
/// distance sums stay in int64 (numerator over |E|), rationals are formed
/// only at comparison boundaries. Limited to n <= 30 (bitmask frontiers).
class PairSpace {
public:
    explicit PairSpace(int n);

    int n() const { return n_; }
    int pair_count() const { return static_cast<int>(pairs_.size()); }
    int index(NodeId u, NodeId v) const;
    std::pair<NodeId, NodeId> nodes(int idx) const { return pairs_[static_cast<size_t>(idx)]; }

private:
    int n_;
    std::vector<std::pair<NodeId, NodeId>> pairs_;
    std::vector<int> index_;  // n*n lookup
};

/// Multiplicity per pair index; the ownership-free view of a multigraph.
using MultVec = std::vector<std::uint8_t>;

MultVec multiplicities_of(const PairSpace& ps, const OwnedMultiGraph& g);
int total_edges(const MultVec& m);

/// Support adjacency as bitmasks; rebuilt per multiplicity vector.
struct SupportMasks {
    std::uint32_t adj[30];

    void build(const PairSpace& ps, const MultVec& m);
    /// Sum of hop distances from src over all nodes, or -1 if some node is
    /// unreachable. skip_u/skip_v (optional) remove one support edge.
    long long delta_sum(int n, NodeId src, NodeId skip_u = -1, NodeId skip_v = -1) const;
    /// Number of nodes unreachable from src, with an optional removed edge.
    int unreachable_count(int n, NodeId src, NodeId skip_u = -1, NodeId skip_v = -1) const;
    /// Largest finite hop distance from src, or -1 if some node is unreachable.
    int eccentricity(int n, NodeId src, NodeId skip_u = -1, NodeId skip_v = -1) const;
};

/// An integer-valued expected sum: value = total / edges when finite.
struct DeletionSum {
    bool finite = true;
    long long total = 0;
    int edges = 0;

    ExtCost to_cost() const;
};

/// Sum over all |E| single-instance deletions of delta_{G-e}(src).
/// Instances of a pair with multiplicity >= 2 reuse the undeleted BFS.
/// Not defined for |E| = 0 (callers handle that convention).
DeletionSum deletion_delta_sum(const PairSpace& ps, const MultVec& m, NodeId src);

/// Same, summed over all source nodes (social distance term).
DeletionSum deletion_social_sum(const PairSpace& ps, const MultVec& m);

/// Sum over deletions of the number of nodes unreachable from src.
DeletionSum deletion_unreachable_sum(const PairSpace& ps, const MultVec& m, NodeId src);

/// delta_G(src) with no deletion; -1 when src is disconnected from some node.
long long plain_delta_sum(const PairSpace& ps, const MultVec& m, NodeId src);

} // namespace advncg
