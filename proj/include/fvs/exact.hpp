#pragma once

#include "fvs/local_ratio.hpp"
#include "fvs/problem.hpp"

namespace fvs {

inline constexpr int kDefaultExactLimit = 15;
inline constexpr int kDefaultCoverLimit = 20;

// Minimum weight FVS by branching on a shortest cycle of the residual graph
// (branch i deletes the i-th cycle vertex and keeps the earlier ones), pruned
// against the incumbent. Throws InstanceTooLarge when n > limit.
Solution exact_fvs(const WeightedDigraph& g, int limit = kDefaultExactLimit);

// Minimum weight SFVS by branching on triangles through surviving terminals.
Solution exact_sfvs(const SfvsInstance& inst, int limit = kDefaultExactLimit);

// Minimum weight vertex cover by branching on an uncovered edge.
VertexSet exact_vertex_cover(const UndirectedEdgeSet& edges, const WeightMap& w,
                             int limit = kDefaultCoverLimit);

}  // namespace fvs
