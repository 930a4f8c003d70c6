#pragma once

#include <vector>

#include "fvs/config.hpp"
#include "fvs/local_ratio.hpp"
#include "fvs/problem.hpp"

namespace fvs {

struct CycleElimination {
  VertexSet removed;    // C_i, never contains the pivot
  WeightMap weights;    // weights after the local-ratio updates
  // C' \ {x} for every round, in order. Each has size <= 2*alpha when the
  // input's independence number is <= alpha.
  std::vector<VertexSet> obstructions;
};

// Repeatedly takes a shortest cycle C through x in g - removed, its shortest
// induced sub-cycle C', moves the lightest vertex of C' \ {x} into `removed`
// and applies update2 to C' \ {x}. Stops once no cycle passes through x.
CycleElimination eliminate_cycles_through(const WeightedDigraph& g, const WeightMap& w, Vertex x);

// Randomized divide-and-conquer 2*alpha-approximation for minimum weight FVS
// in digraphs with independence number <= alpha. The output is always an
// FVS; with the full-size constants (Profile::paper) the bound holds with
// probability >= 1/2. Deterministic for a fixed cfg.rng_seed.
Solution find_fvs(const WeightedDigraph& g, int alpha, const AlgoConfig& cfg);

// Deterministic local-ratio (2*alpha + 1)-approximation: pay the minimum
// residual weight on a shortest cycle until the graph is acyclic, then
// reverse-delete.
Solution local_ratio_fvs_baseline(const WeightedDigraph& g, int alpha);

}  // namespace fvs
