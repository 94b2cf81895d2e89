#pragma once

#include "advncg/graph.hpp"

namespace advncg {

/// delta_G(u): sum of hop distances from u to every node; infinity iff some
/// node is unreachable from u.
ExtCost delta_sum(const OwnedMultiGraph& g, NodeId u);

/// Expected distance sum after one uniformly random edge-instance deletion:
/// (1/|E|) * sum over instances e of delta_{G-e}(u). Every parallel instance
/// is a separate deletion event. Infinity iff any single deletion leaves u
/// disconnected from some node. Conventions: n = 1 -> 0; |E| = 0 with
/// n > 1 -> infinity (the deletion distribution is undefined).
ExtCost expected_distance_cost(const OwnedMultiGraph& g, NodeId u);

/// Expected number of nodes unreachable from u after one random deletion
/// (the reachability penalty of the Kliemann model). Always finite for
/// |E| >= 1; for |E| = 0 it is the unreachable count of g itself.
ExtCost expected_unreachable(const OwnedMultiGraph& g, NodeId u);

/// alpha * |S_u| + distance term of the selected model:
///   AdvNcg    -> expected_distance_cost(g, u)
///   Ncg       -> delta_sum(g, u)
///   Kliemann  -> expected_unreachable(g, u)
ExtCost agent_cost(const OwnedMultiGraph& g, const GameConfig& cfg, NodeId u);

/// Sum of agent costs = alpha * |E| + sum of distance terms. Invariant under
/// any reassignment of edge owners.
ExtCost social_cost(const OwnedMultiGraph& g, const GameConfig& cfg);

} // namespace advncg
