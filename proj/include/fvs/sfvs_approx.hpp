#pragma once

#include "fvs/config.hpp"
#include "fvs/local_ratio.hpp"
#include "fvs/problem.hpp"

namespace fvs {

// Split of the terminals for one guessed subset Q: inside = Q goes into the
// solution, outside = S \ Q stays.
struct BaseCaseSplit {
  VertexSet inside;
  VertexSet outside;
};

BaseCaseSplit split_terminals(const VertexSet& terminals, const VertexSet& q);

// Extends a guess Q of the terminals in the solution to a full SFVS F_Q:
//  - a triangle inside O = S \ Q makes the guess infeasible, F_Q = S;
//  - otherwise F_Q = Q plus the third vertex of every triangle with two
//    vertices in O, plus a 2-approximate vertex cover of the pairs (b, c)
//    that close a triangle with some a in O.
// Weights are those of inst.tournament. Throws ContractViolation if q is not
// a subset of the terminals.
VertexSet base_case_extend(const SfvsInstance& inst, const VertexSet& q);

struct TriangleElimination {
  VertexSet removed;  // never contains the pivot
  WeightMap weights;
};

// While a triangle <x,b,c> survives in t - removed (lexicographically first),
// move the lighter of b, c into `removed` and apply update4 to {b, c}.
TriangleElimination eliminate_triangles_through(const WeightedDigraph& t, const WeightMap& w,
                                                Vertex x);

// Randomized 2-approximation for minimum weight subset FVS in tournaments.
// Always returns an SFVS; deterministic for a fixed cfg.rng_seed.
Solution find_sfvs(const SfvsInstance& inst, const AlgoConfig& cfg);

// Deterministic local-ratio 3-approximation over triangles through
// terminals, followed by reverse-delete.
Solution local_ratio_sfvs_baseline(const SfvsInstance& inst);

}  // namespace fvs
