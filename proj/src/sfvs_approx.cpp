#include "fvs/sfvs_approx.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "fvs/rng.hpp"

namespace fvs {

namespace {

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Terminals of the parent that survive in the subgraph, in local ids.
VertexSet localize(const VertexSet& terminals, const std::vector<Vertex>& to_parent) {
  VertexSet out;
  std::size_t j = 0;
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    while (j < terminals.size() && terminals[j] < to_parent[i]) ++j;
    if (j < terminals.size() && terminals[j] == to_parent[i]) out.push_back(static_cast<Vertex>(i));
  }
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

// F_Q for one guess, on raw bit masks. Returns nullopt when O holds a triangle.
std::optional<VertexSet> extend_guess(const WeightedDigraph& t, const VertexSet& terminals,
                                      const VertexSet& q) {
  const auto n = static_cast<std::size_t>(t.size());
  const VertexBits inside = to_bits(n, q);
  VertexBits outside = to_bits(n, terminals);
  outside.subtract(inside);

  // Triangle a -> b -> c -> a entirely in O: Q cannot be extended.
  bool blocked = false;
  outside.for_each([&](std::size_t a) {
    if (blocked) return;
    for (Vertex b : t.out(static_cast<Vertex>(a)))
      if (outside.test(static_cast<std::size_t>(b)) &&
          VertexBits::first_common(t.out_bits(b), t.in_bits(static_cast<Vertex>(a)), outside)) {
        blocked = true;
        return;
      }
  });
  if (blocked) return std::nullopt;

  // Non-terminals still present in T - I.
  VertexBits rest(n, true);
  rest.subtract(inside);
  rest.subtract(outside);

  // Phase 1: a, b in O and c outside I u O. Deleting such a c cannot create
  // or destroy another such triangle, so the loop reduces to a union.
  VertexBits forced(n);
  outside.for_each([&](std::size_t a) {
    for (Vertex b : t.out(static_cast<Vertex>(a))) {
      if (!outside.test(static_cast<std::size_t>(b))) continue;
      VertexBits c = t.out_bits(b);
      c &= t.in_bits(static_cast<Vertex>(a));
      c &= rest;
      forced |= c;
    }
  });
  rest.subtract(forced);

  // Phase 2: exactly one vertex a in O; cover the pairs (b, c).
  std::vector<std::pair<Vertex, Vertex>> pairs;
  outside.for_each([&](std::size_t a) {
    for (Vertex b : t.out(static_cast<Vertex>(a))) {
      if (!rest.test(static_cast<std::size_t>(b))) continue;
      VertexBits c = t.out_bits(b);
      c &= t.in_bits(static_cast<Vertex>(a));
      c &= rest;
      c.for_each([&](std::size_t cv) { pairs.emplace_back(b, static_cast<Vertex>(cv)); });
    }
  });
  VertexSet result = set_union(q, to_set(forced));
  if (!pairs.empty()) {
    const VertexSet cover =
        vertex_cover_2approx(UndirectedEdgeSet(std::move(pairs)), WeightMap(t.weights()));
    result = set_union(result, cover);
  }
  return result;
}

// Calls f(Q) for every Q subset of `terminals` with |Q| <= cap, by size then
// lexicographically.
template <class F>
void for_each_small_subset(const VertexSet& terminals, int cap, F&& f) {
  const std::size_t s = terminals.size();
  const std::size_t max_k = std::min<std::size_t>(s, static_cast<std::size_t>(std::max(cap, 0)));
  std::vector<std::size_t> idx;
  VertexSet q;
  for (std::size_t k = 0; k <= max_k; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      q.clear();
      for (std::size_t i : idx) q.push_back(terminals[i]);
      f(q);
      // Next combination.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == s - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

class SfvsRecursion {
 public:
  explicit SfvsRecursion(const AlgoConfig& cfg) : cfg_(cfg) {}

  VertexSet solve(const WeightedDigraph& t, const VertexSet& terminals, std::uint64_t key) {
    const auto n = static_cast<std::size_t>(t.size());
    const std::size_t s = terminals.size();
    if (s == 0 || s_acyclic(t, terminals)) return {};

    VertexSet best;
    Weight best_weight = 0;
    bool have = false;
    auto consider = [&](VertexSet candidate) {
      const Weight cw = total_weight(t, candidate);
      if (!have || cw < best_weight) {
        best = std::move(candidate);
        best_weight = cw;
        have = true;
      }
    };

    for_each_small_subset(terminals, cfg_.sfvs_subset_cap, [&](const VertexSet& q) {
      auto f = extend_guess(t, terminals, q);
      consider(f ? std::move(*f) : terminals);
    });
    if (s <= static_cast<std::size_t>(cfg_.sfvs_base_s)) return best;

    const WeightMap w(t.weights());

    // Candidate F0: the s/6 lightest terminals plus a solution of the rest.
    {
      VertexSet order = terminals;
      std::stable_sort(order.begin(), order.end(),
                       [&](Vertex a, Vertex b) { return t.weight(a) < t.weight(b); });
      order.resize(std::clamp<std::size_t>((s + 5) / 6, 1, s - 1));
      std::sort(order.begin(), order.end());
      const WeightMap reduced = update3(w, order, terminals);
      VertexBits keep(n, true);
      keep.subtract(to_bits(n, order));
      InducedSubgraph sub = induced_subgraph(t, keep);
      sub.graph = std::move(sub.graph).with_weights(restrict_weights(reduced, sub.to_parent));
      const VertexSet sub_terms = localize(set_difference(terminals, order), sub.to_parent);
      consider(set_union(order, lift(solve(sub.graph, sub_terms, substream(key, 0)), sub.to_parent)));
    }

    const VertexBits terminal_bits = to_bits(n, terminals);
    for (int i = 0; i < cfg_.repetitions; ++i) {
      const std::uint64_t trial = substream(key, static_cast<std::uint64_t>(i) + 1);
      SplitMix64 rng(trial);
      const Vertex x = terminals[rng.uniform(s)];
      if (below_pivot_threshold(degrees(t, x, terminal_bits).min(), s, 1)) {
        consider(terminals);
        continue;
      }
      TriangleElimination elim = eliminate_triangles_through(t, w, x);
      VertexBits alive(n, true);
      alive.subtract(to_bits(n, elim.removed));
      const ReachPartition part = reach_partition(t, x, alive);

      VertexSet candidate = elim.removed;
      std::uint64_t tag = 1;
      for (const VertexSet* side : {&part.reachable, &part.unreachable}) {
        const std::uint64_t child = substream(trial, tag++);
        if (side->empty()) continue;
        InducedSubgraph sub = induced_subgraph(t, *side);
        const VertexSet sub_terms = localize(terminals, sub.to_parent);
        if (sub_terms.empty()) continue;
        sub.graph = std::move(sub.graph).with_weights(restrict_weights(elim.weights, sub.to_parent));
        candidate = set_union(candidate, lift(solve(sub.graph, sub_terms, child), sub.to_parent));
      }
      consider(std::move(candidate));
    }
    return best;
  }

 private:
  const AlgoConfig& cfg_;
};

}  // namespace

BaseCaseSplit split_terminals(const VertexSet& terminals, const VertexSet& q) {
  if (!std::includes(terminals.begin(), terminals.end(), q.begin(), q.end()))
    throw ContractViolation("guessed set is not a subset of the terminals");
  return {q, set_difference(terminals, q)};
}

VertexSet base_case_extend(const SfvsInstance& inst, const VertexSet& q) {
  inst.validate();
  split_terminals(inst.terminals, q);
  auto f = extend_guess(inst.tournament, inst.terminals, q);
  return f ? std::move(*f) : inst.terminals;
}

TriangleElimination eliminate_triangles_through(const WeightedDigraph& t, const WeightMap& w,
                                                Vertex x) {
  TriangleElimination out;
  out.weights = w;
  VertexBits alive = all_vertices(t);
  while (auto tri = triangle_through(t, x, alive)) {
    VertexSet q{tri->vertices[1], tri->vertices[2]};
    std::sort(q.begin(), q.end());
    const Vertex pick = out.weights.lightest(q);
    out.removed.push_back(pick);
    alive.reset(static_cast<std::size_t>(pick));
    out.weights = update4(out.weights, q);
  }
  std::sort(out.removed.begin(), out.removed.end());
  return out;
}

Solution find_sfvs(const SfvsInstance& inst, const AlgoConfig& cfg) {
  inst.validate();
  cfg.validate();
  SfvsRecursion rec(cfg);
  Solution s;
  s.vertices = rec.solve(inst.tournament, inst.terminals, cfg.rng_seed);
  s.weight = total_weight(inst.tournament, s.vertices);
  s.algorithm = "find_sfvs";
  s.seed = cfg.rng_seed;
  s.valid = is_sfvs(inst, s.vertices);
  if (!s.valid) throw std::logic_error("find_sfvs produced a set that is not an SFVS");
  return s;
}

Solution local_ratio_sfvs_baseline(const SfvsInstance& inst) {
  inst.validate();
  const auto& t = inst.tournament;
  std::vector<Weight> residual = t.weights();
  VertexBits alive = all_vertices(t);
  std::vector<Vertex> zeroed;
  while (true) {
    std::optional<Cycle> tri;
    for (Vertex x : inst.terminals)
      if ((tri = triangle_through(t, x, alive))) break;
    if (!tri) break;
    Weight pay = std::numeric_limits<Weight>::max();
    for (Vertex v : tri->vertices) pay = std::min(pay, residual[v]);
    VertexSet members = tri->vertices;
    std::sort(members.begin(), members.end());
    for (Vertex v : members) {
      residual[v] -= pay;
      if (residual[v] == 0) {
        alive.reset(static_cast<std::size_t>(v));
        zeroed.push_back(v);
      }
    }
  }
  for (auto it = zeroed.rbegin(); it != zeroed.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    alive.set(v);
    if (!s_acyclic(t, inst.terminals, alive)) alive.reset(v);
  }
  Solution s;
  VertexBits chosen = all_vertices(t);
  chosen.subtract(alive);
  s.vertices = to_set(chosen);
  s.weight = total_weight(t, s.vertices);
  s.algorithm = "baseline_sfvs";
  s.valid = is_sfvs(inst, s.vertices);
  return s;
}

}  // namespace fvs
