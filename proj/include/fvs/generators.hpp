#pragma once

#include <cstdint>
#include <string>

#include "fvs/graph_io.hpp"
#include "fvs/local_ratio.hpp"

namespace fvs {

struct GenSpec {
  int n = 10;
  int alpha = 1;
  double cross_arc_prob = 0.5;
  bool digon_allowed = false;
  Weight weight_max = 1;
  double terminal_fraction = 0.0;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument unless 1 <= alpha <= n and probabilities are
  // within [0, 1].
  void validate() const;
  // One-line key=value rendering, embedded as a comment in generated files.
  std::string describe() const;
};

// Random tournament with unit weights: pair (u, v), u < v, in lexicographic
// order gets u -> v when the coin comes up heads.
WeightedDigraph gen_tournament(int n, std::uint64_t seed);

// Vertex ids split into alpha contiguous blocks whose sizes differ by at most
// one. Each block is a random tournament, so any alpha + 1 vertices contain an
// adjacent pair. Every ordered cross-block pair gets an arc with probability
// p; when both directions come up and digons are not allowed, a coin keeps
// one of them. Unit weights.
WeightedDigraph gen_alpha_bounded(const GenSpec& spec);

// Uniform integers in [0, weight_max].
WeightMap gen_weights(int n, Weight weight_max, std::uint64_t seed);

// ceil(fraction * n) distinct vertices chosen uniformly, sorted.
VertexSet gen_terminals(int n, double fraction, std::uint64_t seed);

// Full instance for a spec: graph from gen_alpha_bounded, weights and
// terminals from independent substreams of spec.seed. Terminals are only
// attached when terminal_fraction > 0.
GraphFile gen_instance(const GenSpec& spec);

}  // namespace fvs
