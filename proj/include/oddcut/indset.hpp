#pragma once

#include <cstdint>

#include "oddcut/graph.hpp"

namespace oddcut {

// Maximal independent set by repeated minimum-residual-degree selection;
// ties are broken by a seeded shuffle rank, then vertex index. Deterministic
// per seed.
VertexSet greedy_mis(const CubicGraph& g, std::uint64_t seed);

// Exact maximum independent set via branch and bound (forced inclusion of
// degree-0/1 vertices, closed-form paths/cycles once all residual degrees
// are <= 2, size pruning). Raises BudgetExceeded when the search tree
// outgrows node_budget; the returned witness is deterministic.
VertexSet max_is(const CubicGraph& g, long long node_budget = 10000000);

// Deterministic size-k subset of an independent set: drop largest indices
// first. Raises KTooLarge when k exceeds |I|.
VertexSet shrink_to(const VertexSet& I, int k);

}  // namespace oddcut
