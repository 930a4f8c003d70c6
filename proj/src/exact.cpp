#include "fvs/exact.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

namespace fvs {

namespace {

void check_limit(int n, int limit, const char* what) {
  if (n > limit)
    throw InstanceTooLarge(std::string(what) + ": " + std::to_string(n) +
                           " vertices exceeds exact limit " + std::to_string(limit));
}

// Shared branch-and-bound over "obstructions" (vertex lists that must be hit).
// `find` returns an obstruction of the residual graph or nullopt when the
// residual graph is feasible.
class HittingSearch {
 public:
  using Finder = std::function<std::optional<std::vector<Vertex>>(const VertexBits& alive)>;

  HittingSearch(const WeightedDigraph& g, Finder find) : g_(g), find_(std::move(find)) {}

  VertexSet run() {
    const auto n = static_cast<std::size_t>(g_.size());
    VertexBits alive = all_vertices(g_);
    VertexBits fixed(n);
    std::vector<Vertex> chosen;
    search(alive, fixed, chosen, 0);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void search(VertexBits& alive, VertexBits& fixed, std::vector<Vertex>& chosen, Weight cost) {
    if (have_best_ && cost >= best_cost_) return;
    const auto obstruction = find_(alive);
    if (!obstruction) {
      have_best_ = true;
      best_cost_ = cost;
      best_ = chosen;
      return;
    }
    std::vector<Vertex> options;
    for (Vertex v : *obstruction)
      if (!fixed.test(static_cast<std::size_t>(v))) options.push_back(v);
    std::sort(options.begin(), options.end(), [&](Vertex a, Vertex b) {
      return g_.weight(a) != g_.weight(b) ? g_.weight(a) < g_.weight(b) : a < b;
    });
    std::vector<Vertex> newly_fixed;
    for (Vertex v : options) {
      const auto uv = static_cast<std::size_t>(v);
      alive.reset(uv);
      chosen.push_back(v);
      search(alive, fixed, chosen, add_weight(cost, g_.weight(v)));
      chosen.pop_back();
      alive.set(uv);
      // Later branches keep v.
      fixed.set(uv);
      newly_fixed.push_back(v);
    }
    for (Vertex v : newly_fixed) fixed.reset(static_cast<std::size_t>(v));
  }

  const WeightedDigraph& g_;
  Finder find_;
  bool have_best_ = false;
  Weight best_cost_ = 0;
  VertexSet best_;
};

}  // namespace

Solution exact_fvs(const WeightedDigraph& g, int limit) {
  check_limit(g.size(), limit, "exact_fvs");
  HittingSearch search(g, [&](const VertexBits& alive) -> std::optional<std::vector<Vertex>> {
    if (auto c = girth_cycle(g, alive)) return c->vertices;
    return std::nullopt;
  });
  Solution s;
  s.vertices = search.run();
  s.weight = total_weight(g, s.vertices);
  s.algorithm = "exact_fvs";
  s.valid = is_fvs(g, s.vertices);
  return s;
}

Solution exact_sfvs(const SfvsInstance& inst, int limit) {
  inst.validate();
  const auto& t = inst.tournament;
  check_limit(t.size(), limit, "exact_sfvs");
  HittingSearch search(t, [&](const VertexBits& alive) -> std::optional<std::vector<Vertex>> {
    for (Vertex x : inst.terminals)
      if (auto c = triangle_through(t, x, alive)) return c->vertices;
    return std::nullopt;
  });
  Solution s;
  s.vertices = search.run();
  s.weight = total_weight(t, s.vertices);
  s.algorithm = "exact_sfvs";
  s.valid = is_sfvs(inst, s.vertices);
  return s;
}

VertexSet exact_vertex_cover(const UndirectedEdgeSet& edges, const WeightMap& w, int limit) {
  const VertexSet ends = edges.endpoints();
  check_limit(static_cast<int>(ends.size()), std::min(limit, 32), "exact_vertex_cover");
  if (ends.empty()) return {};
  for (Vertex v : ends)
    if (!w.contains(v))
      throw ContractViolation("vertex cover: endpoint " + std::to_string(v) + " has no weight");

  // Compact ids so the branching works on small bit masks.
  const auto k = ends.size();
  auto local = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(ends.begin(), ends.end(), v) - ends.begin());
  };
  std::vector<std::uint32_t> adj(k, 0);
  for (const auto& [u, v] : edges.edges()) {
    adj[local(u)] |= std::uint32_t{1} << local(v);
    adj[local(v)] |= std::uint32_t{1} << local(u);
  }
  std::vector<Weight> wt(k);
  for (std::size_t i = 0; i < k; ++i) wt[i] = w.at(ends[i]);

  bool have = false;
  Weight best = 0;
  std::uint32_t best_mask = 0;
  // taken: in cover; banned: excluded from cover.
  std::function<void(std::uint32_t, std::uint32_t, Weight)> go = [&](std::uint32_t taken,
                                                                      std::uint32_t banned,
                                                                      Weight cost) {
    if (have && cost >= best) return;
    for (std::size_t u = 0; u < k; ++u) {
      if (taken >> u & 1U) continue;
      const std::uint32_t open = adj[u] & ~taken;
      if (!open) continue;
      // Edge (u, v) uncovered: either u joins, or u is banned and all its
      // uncovered neighbours join.
      if (!(banned >> u & 1U)) go(taken | std::uint32_t{1} << u, banned, add_weight(cost, wt[u]));
      if (open & banned) return;
      Weight extra = cost;
      for (std::size_t v = 0; v < k; ++v)
        if (open >> v & 1U) extra = add_weight(extra, wt[v]);
      go(taken | open, banned | std::uint32_t{1} << u, extra);
      return;
    }
    have = true;
    best = cost;
    best_mask = taken;
  };
  go(0, 0, 0);

  VertexSet cover;
  for (std::size_t i = 0; i < k; ++i)
    if (best_mask >> i & 1U) cover.push_back(ends[i]);
  return cover;
}

}  // namespace fvs
