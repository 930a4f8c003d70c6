#include "fvs/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fvs/rng.hpp"

namespace fvs {

namespace {

constexpr std::uint64_t kArcStream = 1;
constexpr std::uint64_t kWeightStream = 2;
constexpr std::uint64_t kTerminalStream = 3;

}  // namespace

void GenSpec::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (alpha < 1 || alpha > n) throw std::invalid_argument("alpha must satisfy 1 <= alpha <= n");
  if (!(cross_arc_prob >= 0.0 && cross_arc_prob <= 1.0))
    throw std::invalid_argument("cross-arc probability must be in [0, 1]");
  if (!(terminal_fraction >= 0.0 && terminal_fraction <= 1.0))
    throw std::invalid_argument("terminal fraction must be in [0, 1]");
}

std::string GenSpec::describe() const {
  std::ostringstream out;
  out << "gen n=" << n << " alpha=" << alpha << " p=" << cross_arc_prob
      << " digons=" << (digon_allowed ? 1 : 0) << " weight_max=" << weight_max
      << " terminals=" << terminal_fraction << " seed=" << seed;
  return out.str();
}

WeightedDigraph gen_tournament(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  SplitMix64 rng(seed);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) arcs.push_back(rng.coin() ? Arc{u, v} : Arc{v, u});
  return WeightedDigraph(n, arcs, true);
}

WeightedDigraph gen_alpha_bounded(const GenSpec& spec) {
  spec.validate();
  const int n = spec.n;
  std::vector<int> group(static_cast<std::size_t>(n));
  {
    const int base = n / spec.alpha;
    const int extra = n % spec.alpha;
    int v = 0;
    for (int g = 0; g < spec.alpha; ++g)
      for (int k = 0; k < base + (g < extra ? 1 : 0); ++k) group[v++] = g;
  }
  SplitMix64 rng(substream(spec.seed, kArcStream));
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (group[u] == group[v]) {
        arcs.push_back(rng.coin() ? Arc{u, v} : Arc{v, u});
        continue;
      }
      const bool forward = rng.bernoulli(spec.cross_arc_prob);
      const bool backward = rng.bernoulli(spec.cross_arc_prob);
      if (forward && backward && !spec.digon_allowed) {
        arcs.push_back(rng.coin() ? Arc{u, v} : Arc{v, u});
        continue;
      }
      if (forward) arcs.emplace_back(u, v);
      if (backward) arcs.emplace_back(v, u);
    }
  }
  return WeightedDigraph(n, arcs, spec.alpha == 1);
}

WeightMap gen_weights(int n, Weight weight_max, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Weight> w(static_cast<std::size_t>(n));
  for (auto& x : w)
    x = weight_max == std::numeric_limits<Weight>::max() ? rng.next() : rng.uniform(weight_max + 1);
  return WeightMap(std::move(w));
}

VertexSet gen_terminals(int n, double fraction, std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0))
    throw std::invalid_argument("terminal fraction must be in [0, 1]");
  // The epsilon keeps e.g. 0.3 * 10 from rounding up to 4.
  const auto k = std::min(static_cast<std::size_t>(n),
                          static_cast<std::size_t>(std::max(0.0, std::ceil(fraction * n - 1e-9))));
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  SplitMix64 rng(seed);
  // Partial Fisher-Yates: position i swaps with a uniform position in [i, n).
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.uniform(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

GraphFile gen_instance(const GenSpec& spec) {
  const WeightedDigraph shape = gen_alpha_bounded(spec);
  const WeightMap w = gen_weights(spec.n, spec.weight_max, substream(spec.seed, kWeightStream));
  std::vector<Weight> weights;
  for (Vertex v = 0; v < spec.n; ++v) weights.push_back(w.at(v));
  GraphFile file;
  file.graph = shape.with_weights(std::move(weights));
  if (spec.terminal_fraction > 0.0)
    file.terminals =
        gen_terminals(spec.n, spec.terminal_fraction, substream(spec.seed, kTerminalStream));
  file.comments.push_back(spec.describe());
  return file;
}

}  // namespace fvs
