#pragma once

#include <cstdint>
#include <string>

#include "fvs/graph.hpp"

namespace fvs {

// Tournament plus terminal set. Weights live on the tournament.
struct SfvsInstance {
  WeightedDigraph tournament;
  VertexSet terminals;

  // Throws std::invalid_argument if the graph is not a tournament or the
  // terminals are unsorted, repeated or out of range.
  void validate() const;
};

struct Solution {
  VertexSet vertices;
  Weight weight = 0;  // under the caller's original weights
  std::string algorithm;
  std::uint64_t seed = 0;
  bool valid = false;
};

bool is_fvs(const WeightedDigraph& g, const VertexSet& f);
bool is_sfvs(const SfvsInstance& inst, const VertexSet& f);

}  // namespace fvs
