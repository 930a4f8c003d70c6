#include "fvs/fvs_approx.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "fvs/exact.hpp"
#include "fvs/rng.hpp"

namespace fvs {

namespace {

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet lift(const VertexSet& local, const std::vector<Vertex>& to_parent) {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent[v]);
  return out;
}

std::vector<Weight> restrict_weights(const WeightMap& w, const std::vector<Vertex>& to_parent) {
  std::vector<Weight> out;
  out.reserve(to_parent.size());
  for (Vertex v : to_parent) out.push_back(w.at(v));
  return out;
}

// Lowest-weight vertices first, lowest id on ties.
VertexSet lightest_k(const WeightedDigraph& g, const VertexSet& pool, std::size_t k) {
  VertexSet order = pool;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.weight(a) < g.weight(b); });
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

// Sum of local-ratio payments over shortest cycles: a cycle packing, hence a
// lower bound on the optimum.
Weight packing_bound(const WeightedDigraph& g) {
  std::vector<Weight> residual = g.weights();
  VertexBits alive = all_vertices(g);
  Weight total = 0;
  while (auto c = girth_cycle(g, alive)) {
    Weight pay = std::numeric_limits<Weight>::max();
    for (Vertex v : c->vertices) pay = std::min(pay, residual[v]);
    total += pay;
    for (Vertex v : c->vertices) {
      residual[v] -= pay;
      if (residual[v] == 0) alive.reset(static_cast<std::size_t>(v));
    }
  }
  return total;
}

std::size_t light_set_size(std::size_t n, std::size_t den) {
  const std::size_t k = (n + den - 1) / den;
  return std::clamp<std::size_t>(k, 1, n - 1);
}

// Arc rows and weights of a subinstance, the identity used for memoisation.
using Content = std::vector<std::uint64_t>;

Content content_of(const WeightedDigraph& g) {
  Content c;
  c.push_back(static_cast<std::uint64_t>(g.size()));
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto& words = g.out_bits(v).words();
    c.insert(c.end(), words.begin(), words.end());
  }
  c.insert(c.end(), g.weights().begin(), g.weights().end());
  return c;
}

std::uint64_t content_hash(const Content& c) {
  std::uint64_t h = 0;
  for (std::uint64_t x : c) h = substream(h, x);
  return h;
}

struct ContentHash {
  std::size_t operator()(const Content& c) const { return static_cast<std::size_t>(content_hash(c)); }
};

// Each call draws its randomness from (seed, content), so a subinstance that
// shows up again in another trial gets the same answer and is solved once.
class FvsRecursion {
 public:
  FvsRecursion(int alpha, const AlgoConfig& cfg) : alpha_(alpha), cfg_(cfg) {}

  // Weights are those carried by g.
  VertexSet solve(const WeightedDigraph& g) {
    Content c = content_of(g);
    if (auto it = memo_.find(c); it != memo_.end()) return it->second;
    VertexSet out = compute(g, substream(cfg_.rng_seed, content_hash(c)));
    memo_.emplace(std::move(c), out);
    return out;
  }

 private:
  VertexSet compute(const WeightedDigraph& g, std::uint64_t key) {
    const auto n = static_cast<std::size_t>(g.size());
    if (n == 0 || is_acyclic(g)) return {};
    if (n <= static_cast<std::size_t>(cfg_.base_case_n))
      return exact_fvs(g, std::numeric_limits<int>::max()).vertices;

    const WeightMap w(g.weights());
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);

    VertexSet best;
    Weight best_weight = 0;
    bool have = false;
    auto consider = [&](VertexSet candidate) {
      const Weight cw = total_weight(g, candidate);
      if (!have || cw < best_weight) {
        best = std::move(candidate);
        best_weight = cw;
        have = true;
      }
    };

    // Candidate F0: the lightest n/(6a) vertices plus a solution of the rest.
    {
      const VertexSet light =
          lightest_k(g, all, light_set_size(n, static_cast<std::size_t>(cfg_.light_fraction_den)));
      const WeightMap reduced = update1(w, light);
      VertexBits keep = all_vertices(g);
      keep.subtract(to_bits(n, light));
      InducedSubgraph sub = induced_subgraph(g, keep);
      sub.graph = std::move(sub.graph).with_weights(restrict_weights(reduced, sub.to_parent));
      consider(set_union(light, lift(solve(sub.graph), sub.to_parent)));
    }

    // No later candidate can be strictly lighter than the optimum, and ties
    // keep the earlier one, so the scan may stop at the bound.
    const Weight bound = packing_bound(g);
    if (best_weight <= bound) return best;

    // A repeated pivot rebuilds the same candidate (sub-calls are memoised),
    // which can never replace the incumbent.
    std::vector<char> tried(n, 0);
    for (int i = 0; i < cfg_.repetitions; ++i) {
      const std::uint64_t trial = substream(key, static_cast<std::uint64_t>(i) + 1);
      SplitMix64 rng(trial);
      const auto x = static_cast<Vertex>(rng.uniform(n));
      if (tried[x]) continue;
      tried[x] = 1;
      if (below_pivot_threshold(degrees(g, x, all_vertices(g)).min(), n, alpha_)) {
        consider(all);
        continue;
      }
      CycleElimination elim = eliminate_cycles_through(g, w, x);
      VertexBits alive = all_vertices(g);
      alive.subtract(to_bits(n, elim.removed));
      const ReachPartition part = reach_partition(g, x, alive);

      VertexSet candidate = elim.removed;
      for (const VertexSet* side : {&part.reachable, &part.unreachable}) {
        if (side->empty()) continue;
        InducedSubgraph sub = induced_subgraph(g, *side);
        sub.graph = std::move(sub.graph).with_weights(restrict_weights(elim.weights, sub.to_parent));
        candidate = set_union(candidate, lift(solve(sub.graph), sub.to_parent));
      }
      consider(std::move(candidate));
      if (best_weight <= bound) break;
    }
    return best;
  }

  int alpha_;
  const AlgoConfig& cfg_;
  std::unordered_map<Content, VertexSet, ContentHash> memo_;
};

}  // namespace

CycleElimination eliminate_cycles_through(const WeightedDigraph& g, const WeightMap& w, Vertex x) {
  if (!g.contains(x)) throw std::invalid_argument("unknown vertex id " + std::to_string(x));
  CycleElimination out;
  out.weights = w;
  VertexBits alive = all_vertices(g);
  while (auto cycle = shortest_cycle_through(g, x, alive)) {
    const Cycle inner = shortest_cycle_in_induced(g, *cycle);
    VertexSet q;
    for (Vertex v : inner.vertices)
      if (v != x) q.push_back(v);
    std::sort(q.begin(), q.end());
    const Vertex pick = out.weights.lightest(q);
    out.removed.push_back(pick);
    alive.reset(static_cast<std::size_t>(pick));
    const Weight low = out.weights.at(pick);
    for (Vertex v : q) out.weights.set(v, out.weights.at(v) - low);
    out.obstructions.push_back(std::move(q));
  }
  std::sort(out.removed.begin(), out.removed.end());
  return out;
}

Solution find_fvs(const WeightedDigraph& g, int alpha, const AlgoConfig& cfg) {
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  cfg.validate();
  FvsRecursion rec(alpha, cfg);
  Solution s;
  s.vertices = rec.solve(g);
  s.weight = total_weight(g, s.vertices);
  s.algorithm = "find_fvs";
  s.seed = cfg.rng_seed;
  s.valid = is_fvs(g, s.vertices);
  if (!s.valid) throw std::logic_error("find_fvs produced a set that is not an FVS");
  return s;
}

Solution local_ratio_fvs_baseline(const WeightedDigraph& g, int alpha) {
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  std::vector<Weight> residual = g.weights();
  VertexBits alive = all_vertices(g);
  std::vector<Vertex> zeroed;
  while (auto c = girth_cycle(g, alive)) {
    Weight pay = std::numeric_limits<Weight>::max();
    for (Vertex v : c->vertices) pay = std::min(pay, residual[v]);
    VertexSet members = c->vertices;
    std::sort(members.begin(), members.end());
    for (Vertex v : members) {
      residual[v] -= pay;
      if (residual[v] == 0) {
        alive.reset(static_cast<std::size_t>(v));
        zeroed.push_back(v);
      }
    }
  }
  // Reverse-delete: put vertices back while the graph stays acyclic.
  for (auto it = zeroed.rbegin(); it != zeroed.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    alive.set(v);
    if (!is_acyclic(g, alive)) alive.reset(v);
  }
  Solution s;
  VertexBits chosen = all_vertices(g);
  chosen.subtract(alive);
  s.vertices = to_set(chosen);
  s.weight = total_weight(g, s.vertices);
  s.algorithm = "baseline_fvs";
  s.valid = is_fvs(g, s.vertices);
  return s;
}

}  // namespace fvs
