#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fvs/graph.hpp"

namespace testutil {

using fvs::Arc;
using fvs::Vertex;
using fvs::Weight;
using fvs::WeightedDigraph;

inline WeightedDigraph digraph(int n, std::vector<Arc> arcs, std::vector<Weight> w = {}) {
  if (w.empty()) w.assign(n, 1);
  return WeightedDigraph(n, arcs, std::move(w));
}

inline WeightedDigraph tournament(int n, std::vector<Arc> arcs, std::vector<Weight> w = {}) {
  if (w.empty()) w.assign(n, 1);
  return WeightedDigraph(n, arcs, std::move(w), true);
}

inline WeightedDigraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return digraph(n, arcs);
}

inline WeightedDigraph transitive_tournament(int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) arcs.emplace_back(u, v);
  return tournament(n, arcs);
}

// Test-side random instances, drawn with std::mt19937_64 so they do not share
// code with the library's generators.
inline std::vector<Weight> random_weights(std::mt19937_64& rng, int n, Weight max) {
  std::uniform_int_distribution<Weight> d(0, max);
  std::vector<Weight> w(n);
  for (auto& x : w) x = d(rng);
  return w;
}

inline WeightedDigraph random_tournament(std::mt19937_64& rng, int n, Weight wmax = 1) {
  std::vector<Arc> arcs;
  std::bernoulli_distribution coin(0.5);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) arcs.push_back(coin(rng) ? Arc{u, v} : Arc{v, u});
  return WeightedDigraph(n, arcs, wmax == 1 ? std::vector<Weight>(n, 1) : random_weights(rng, n, wmax), true);
}

inline WeightedDigraph random_digraph(std::mt19937_64& rng, int n, double p, Weight wmax = 1) {
  std::vector<Arc> arcs;
  std::bernoulli_distribution arc(p);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && arc(rng)) arcs.emplace_back(u, v);
  return WeightedDigraph(n, arcs, wmax == 1 ? std::vector<Weight>(n, 1) : random_weights(rng, n, wmax));
}

inline std::vector<Vertex> random_subset(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution pick(p);
  std::vector<Vertex> s;
  for (int v = 0; v < n; ++v)
    if (pick(rng)) s.push_back(v);
  return s;
}

}  // namespace testutil
