#include "advncg/cost.hpp"
#include "advncg/error.hpp"
#include "advncg/pairs.hpp"

namespace advncg {

ExtCost delta_sum(const OwnedMultiGraph& g, NodeId u) {
    long long sum = 0;
    for (int d : hop_distances(g, u)) {
        if (d < 0) return ExtCost::infinity();
        sum += d;
    }
    return ExtCost(sum);
}

ExtCost expected_distance_cost(const OwnedMultiGraph& g, NodeId u) {
    if (u < 0 || u >= g.node_count()) throw Error(ErrorKind::InvalidTarget, "node id out of range");
    if (g.node_count() == 1) return ExtCost(0);
    if (g.edge_count() == 0) return ExtCost::infinity();
    PairSpace ps(g.node_count());
    return deletion_delta_sum(ps, multiplicities_of(ps, g), u).to_cost();
}

ExtCost expected_unreachable(const OwnedMultiGraph& g, NodeId u) {
    if (u < 0 || u >= g.node_count()) throw Error(ErrorKind::InvalidTarget, "node id out of range");
    if (g.node_count() == 1) return ExtCost(0);
    if (g.edge_count() == 0) return ExtCost(g.node_count() - 1);
    PairSpace ps(g.node_count());
    return deletion_unreachable_sum(ps, multiplicities_of(ps, g), u).to_cost();
}

ExtCost agent_cost(const OwnedMultiGraph& g, const GameConfig& cfg, NodeId u) {
    ExtCost edge_cost(cfg.alpha * g.strategy_size(u));
    switch (cfg.model) {
        case CostModel::AdvNcg: return edge_cost + expected_distance_cost(g, u);
        case CostModel::Ncg: return edge_cost + delta_sum(g, u);
        case CostModel::Kliemann: return edge_cost + expected_unreachable(g, u);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown cost model");
}

ExtCost social_cost(const OwnedMultiGraph& g, const GameConfig& cfg) {
    int n = g.node_count();
    if (n == 1) return ExtCost(0);
    ExtCost edge_cost(cfg.alpha * g.edge_count());

    if (cfg.model == CostModel::AdvNcg && g.edge_count() >= 1) {
        // one pass over deletions for all sources
        PairSpace ps(n);
        return edge_cost + deletion_social_sum(ps, multiplicities_of(ps, g)).to_cost();
    }
    ExtCost dist(0);
    for (NodeId u = 0; u < n; ++u) {
        switch (cfg.model) {
            case CostModel::AdvNcg: dist += expected_distance_cost(g, u); break;
            case CostModel::Ncg: dist += delta_sum(g, u); break;
            case CostModel::Kliemann: dist += expected_unreachable(g, u); break;
        }
    }
    return edge_cost + dist;
}

} // namespace advncg
