#pragma once

// Brute-force reference implementations. They only use the raw arc and weight
// accessors of WeightedDigraph, never the library's algorithms.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "fvs/graph.hpp"

namespace oracle {

using fvs::Vertex;
using fvs::Weight;
using fvs::WeightedDigraph;

using Matrix = std::vector<std::vector<bool>>;

// reach[u][v]: nonempty path u -> v using only vertices with keep[] set.
inline Matrix closure(const WeightedDigraph& g, const std::vector<bool>& keep) {
  const int n = g.size();
  Matrix r(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) r[u][v] = keep[u] && keep[v] && g.has_arc(u, v);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (r[i][k])
        for (int j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

inline std::vector<bool> keep_mask(int n, std::uint32_t removed) {
  std::vector<bool> keep(n);
  for (int v = 0; v < n; ++v) keep[v] = !((removed >> v) & 1U);
  return keep;
}

inline std::vector<bool> keep_mask(int n, const std::vector<Vertex>& removed) {
  std::vector<bool> keep(n, true);
  for (Vertex v : removed) keep[v] = false;
  return keep;
}

inline bool acyclic(const WeightedDigraph& g, const std::vector<bool>& keep) {
  const Matrix r = closure(g, keep);
  for (int v = 0; v < g.size(); ++v)
    if (r[v][v]) return false;
  return true;
}

inline bool acyclic(const WeightedDigraph& g) { return acyclic(g, std::vector<bool>(g.size(), true)); }

// No surviving terminal lies on a cycle.
inline bool s_acyclic(const WeightedDigraph& g, const std::vector<Vertex>& s, const std::vector<bool>& keep) {
  const Matrix r = closure(g, keep);
  for (Vertex v : s)
    if (keep[v] && r[v][v]) return false;
  return true;
}

inline Weight mask_weight(const WeightedDigraph& g, std::uint32_t mask) {
  Weight w = 0;
  for (int v = 0; v < g.size(); ++v)
    if ((mask >> v) & 1U) w += g.weight(v);
  return w;
}

// Minimum FVS weight by scanning all 2^n subsets.
inline Weight min_fvs_weight(const WeightedDigraph& g) {
  const int n = g.size();
  Weight best = std::numeric_limits<Weight>::max();
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    const Weight w = mask_weight(g, m);
    if (w < best && acyclic(g, keep_mask(n, m))) best = w;
  }
  return best;
}

inline Weight min_sfvs_weight(const WeightedDigraph& t, const std::vector<Vertex>& s) {
  const int n = t.size();
  Weight best = std::numeric_limits<Weight>::max();
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    const Weight w = mask_weight(t, m);
    if (w < best && s_acyclic(t, s, keep_mask(n, m))) best = w;
  }
  return best;
}

// Minimum vertex cover weight over vertices 0..n-1 by subset scan.
inline Weight min_cover_weight(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                               const std::vector<Weight>& w) {
  Weight best = std::numeric_limits<Weight>::max();
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    bool ok = true;
    for (auto [u, v] : edges)
      if (!((m >> u) & 1U) && !((m >> v) & 1U)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Weight total = 0;
    for (int v = 0; v < n; ++v)
      if ((m >> v) & 1U) total += w[v];
    if (total < best) best = total;
  }
  return best;
}

// Length of the shortest cycle through x, by exhaustive DFS over simple paths.
inline std::optional<std::size_t> shortest_cycle_length(const WeightedDigraph& g, Vertex x,
                                                        const std::vector<bool>& keep) {
  if (!keep[x]) return std::nullopt;
  const int n = g.size();
  std::optional<std::size_t> best;
  std::vector<bool> on(n, false);
  auto dfs = [&](auto&& self, Vertex u, std::size_t len) -> void {
    // Every extension closes a cycle of length > len.
    if (best && len >= *best) return;
    if (u != x && g.has_arc(u, x)) {
      if (!best || len < *best) best = len;
    }
    for (Vertex v = 0; v < n; ++v)
      if (keep[v] && !on[v] && v != x && g.has_arc(u, v)) {
        on[v] = true;
        self(self, v, len + 1);
        on[v] = false;
      }
  };
  on[x] = true;
  dfs(dfs, x, 1);
  return best;
}

inline std::optional<std::size_t> shortest_cycle_length(const WeightedDigraph& g, Vertex x) {
  return shortest_cycle_length(g, x, std::vector<bool>(g.size(), true));
}

// Girth of the subgraph induced by `vs` (vertices listed explicitly).
inline std::optional<std::size_t> induced_girth(const WeightedDigraph& g, const std::vector<Vertex>& vs) {
  std::vector<bool> keep(g.size(), false);
  for (Vertex v : vs) keep[v] = true;
  std::optional<std::size_t> best;
  for (Vertex v : vs) {
    const auto c = shortest_cycle_length(g, v, keep);
    if (c && (!best || *c < *best)) best = c;
  }
  return best;
}

inline bool has_triangle_through(const WeightedDigraph& t, Vertex x, const std::vector<bool>& keep) {
  const int n = t.size();
  if (!keep[x]) return false;
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      if (b != x && c != x && b != c && keep[b] && keep[c] && t.has_arc(x, b) && t.has_arc(b, c) &&
          t.has_arc(c, x))
        return true;
  return false;
}

inline int independence_number(const WeightedDigraph& g) {
  const int n = g.size();
  int best = 0;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    const int k = __builtin_popcount(m);
    if (k <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (((m >> u) & 1U) && ((m >> v) & 1U) && (g.has_arc(u, v) || g.has_arc(v, u))) ok = false;
    if (ok) best = k;
  }
  return best;
}

}  // namespace oracle
