#include "fvs/config.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fvs/problem.hpp"

namespace fvs {

std::string_view to_string(Profile p) { return p == Profile::paper ? "paper" : "desk"; }

Profile parse_profile(std::string_view s) {
  if (s == "paper") return Profile::paper;
  if (s == "desk") return Profile::desk;
  throw std::invalid_argument("unknown profile '" + std::string(s) + "'");
}

AlgoConfig AlgoConfig::paper(int alpha, std::uint64_t seed) {
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  AlgoConfig c;
  c.profile = Profile::paper;
  c.base_case_n = 30 * alpha;
  c.repetitions = 28 * alpha;
  c.light_fraction_den = 6 * alpha;
  c.sfvs_base_s = 30;
  c.sfvs_subset_cap = 30;
  c.rng_seed = seed;
  return c;
}

AlgoConfig AlgoConfig::desk(int alpha, std::uint64_t seed) {
  AlgoConfig c = paper(alpha, seed);
  c.profile = Profile::desk;
  c.base_case_n = 10;
  c.sfvs_base_s = 8;
  c.sfvs_subset_cap = 2;
  return c;
}

AlgoConfig AlgoConfig::for_profile(Profile p, int alpha, std::uint64_t seed) {
  return p == Profile::paper ? paper(alpha, seed) : desk(alpha, seed);
}

void AlgoConfig::validate() const {
  if (base_case_n < 1 || repetitions < 1 || light_fraction_den < 1 || sfvs_base_s < 1 ||
      sfvs_subset_cap < 0)
    throw std::invalid_argument("algorithm constants must be positive");
}

void SfvsInstance::validate() const {
  if (!tournament.is_tournament()) throw std::invalid_argument("S-FVS instance is not a tournament");
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    if (!tournament.contains(terminals[i]))
      throw std::invalid_argument("terminal " + std::to_string(terminals[i]) + " is not a vertex");
    if (i > 0 && terminals[i - 1] >= terminals[i])
      throw std::invalid_argument("terminal set must be sorted and duplicate-free");
  }
}

bool is_fvs(const WeightedDigraph& g, const VertexSet& f) {
  VertexBits alive = all_vertices(g);
  alive.subtract(to_bits(static_cast<std::size_t>(g.size()), f));
  return is_acyclic(g, alive);
}

bool is_sfvs(const SfvsInstance& inst, const VertexSet& f) {
  const auto& t = inst.tournament;
  VertexBits alive = all_vertices(t);
  alive.subtract(to_bits(static_cast<std::size_t>(t.size()), f));
  return s_acyclic(t, inst.terminals, alive);
}

}  // namespace fvs
