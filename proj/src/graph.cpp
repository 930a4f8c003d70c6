#include "fvs/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace fvs {

WeightedDigraph::WeightedDigraph(int n, std::span<const Arc> arcs, std::vector<Weight> weights,
                                 bool tournament)
    : n_(n), flagged_(tournament), weights_(std::move(weights)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (weights_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("weight vector has " + std::to_string(weights_.size()) +
                                " entries, expected " + std::to_string(n));
  const auto un = static_cast<std::size_t>(n);
  out_bits_.assign(un, VertexBits(un));
  in_bits_.assign(un, VertexBits(un));
  for (const auto& [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("arc (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") references an unknown vertex");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (out_bits_[u].test(v))
      throw std::invalid_argument("duplicate arc (" + std::to_string(u) + "," + std::to_string(v) +
                                  ")");
    out_bits_[u].set(v);
    in_bits_[v].set(u);
  }
  index_rows();
}

void WeightedDigraph::index_rows() {
  const auto un = static_cast<std::size_t>(n_);
  bool digon = false;
  out_list_.clear();
  in_list_.clear();
  out_off_.assign(1, 0);
  in_off_.assign(1, 0);
  for (std::size_t v = 0; v < un; ++v) {
    out_bits_[v].for_each([&](std::size_t u) { out_list_.push_back(static_cast<Vertex>(u)); });
    in_bits_[v].for_each([&](std::size_t u) { in_list_.push_back(static_cast<Vertex>(u)); });
    out_off_.push_back(out_list_.size());
    in_off_.push_back(in_list_.size());
    if (!digon && out_bits_[v].count_and(in_bits_[v]) > 0) digon = true;
  }
  arc_count_ = out_list_.size();
  tournament_ = !digon && arc_count_ == un * (un - (un > 0 ? 1 : 0)) / 2;
  if (flagged_ && !tournament_)
    throw std::invalid_argument(digon ? "tournament contains a digon"
                                      : "tournament is missing arcs between some pairs");
}

WeightedDigraph::WeightedDigraph(int n, std::span<const Arc> arcs, bool tournament)
    : WeightedDigraph(n, arcs, std::vector<Weight>(static_cast<std::size_t>(std::max(n, 0)), 1),
                      tournament) {}

std::vector<Arc> WeightedDigraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : out(u)) result.emplace_back(u, v);
  return result;
}

WeightedDigraph WeightedDigraph::with_weights(std::vector<Weight> weights) const& {
  return WeightedDigraph(*this).with_weights(std::move(weights));
}

WeightedDigraph WeightedDigraph::with_weights(std::vector<Weight> weights) && {
  if (weights.size() != weights_.size()) throw std::invalid_argument("weight vector size mismatch");
  weights_ = std::move(weights);
  return std::move(*this);
}

InducedSubgraph induced_subgraph(const WeightedDigraph& g, const VertexSet& keep) {
  return induced_subgraph(g, to_bits(static_cast<std::size_t>(g.size()), keep));
}

InducedSubgraph induced_subgraph(const WeightedDigraph& g, const VertexBits& keep) {
  InducedSubgraph sub;
  std::vector<Vertex> local(static_cast<std::size_t>(g.size()), -1);
  keep.for_each([&](std::size_t v) {
    local[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(static_cast<Vertex>(v));
  });
  const std::size_t k = sub.to_parent.size();
  WeightedDigraph& h = sub.graph;
  h.n_ = static_cast<int>(k);
  h.flagged_ = g.flagged_;
  h.weights_.reserve(k);
  h.out_bits_.assign(k, VertexBits(k));
  h.in_bits_.assign(k, VertexBits(k));
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex u = sub.to_parent[i];
    h.weights_.push_back(g.weight(u));
    g.out_bits(u).for_each_common(keep, [&](std::size_t v) {
      const auto j = static_cast<std::size_t>(local[v]);
      h.out_bits_[i].set(j);
      h.in_bits_[j].set(i);
    });
  }
  h.index_rows();
  return sub;
}

bool Cycle::contains(Vertex v) const noexcept {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool is_cycle_of(const WeightedDigraph& g, const Cycle& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 2) return false;
  VertexBits seen(static_cast<std::size_t>(g.size()));
  for (Vertex v : vs) {
    if (!g.contains(v) || seen.test(static_cast<std::size_t>(v))) return false;
    seen.set(static_cast<std::size_t>(v));
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!g.has_arc(vs[i], vs[(i + 1) % vs.size()])) return false;
  return true;
}

VertexBits all_vertices(const WeightedDigraph& g) {
  return VertexBits(static_cast<std::size_t>(g.size()), true);
}

VertexBits to_bits(std::size_t n, const VertexSet& s) {
  VertexBits b(n);
  for (Vertex v : s) {
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    b.set(static_cast<std::size_t>(v));
  }
  return b;
}

VertexSet to_set(const VertexBits& b) {
  VertexSet s;
  s.reserve(b.count());
  b.for_each([&](std::size_t v) { s.push_back(static_cast<Vertex>(v)); });
  return s;
}

Weight add_weight(Weight a, Weight b) {
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("weight sum overflows 64 bits");
  return r;
}

Weight total_weight(const WeightedDigraph& g, const VertexSet& s) {
  Weight sum = 0;
  for (Vertex v : s) sum = add_weight(sum, g.weight(v));
  return sum;
}

namespace {

void require_vertex(const WeightedDigraph& g, Vertex x) {
  if (!g.contains(x)) throw std::invalid_argument("unknown vertex id " + std::to_string(x));
}

void require_tournament(const WeightedDigraph& t) {
  if (!t.is_tournament()) throw std::invalid_argument("graph is not a tournament");
}

void require_alpha(int alpha) {
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
}

// Shortest cycle through x restricted to `alive`, considering only cycles of
// length <= max_len.
std::optional<Cycle> bfs_cycle(const WeightedDigraph& g, Vertex x, const VertexBits& alive,
                               std::size_t max_len) {
  if (!alive.test(static_cast<std::size_t>(x))) return std::nullopt;
  const auto n = static_cast<std::size_t>(g.size());
  // Scratch reused across calls; only entries of visited vertices are read.
  thread_local std::vector<int> dist;
  thread_local std::vector<Vertex> parent;
  thread_local std::vector<Vertex> queue;
  if (dist.size() < n) {
    dist.resize(n);
    parent.resize(n);
  }
  thread_local VertexBits unseen;
  queue.clear();
  unseen = alive;
  unseen.reset(static_cast<std::size_t>(x));
  queue.push_back(x);
  dist[x] = 0;
  parent[x] = -1;
  const VertexBits& closing = g.in_bits(x);
  int found = -1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    if (found >= 0 && dist[u] >= found) break;
    if (static_cast<std::size_t>(dist[u]) + 2 > max_len) break;
    unseen.take(g.out_bits(u), [&](std::size_t vi) {
      const auto v = static_cast<Vertex>(vi);
      dist[v] = dist[u] + 1;
      parent[v] = u;
      queue.push_back(v);
      if (found < 0 && closing.test(vi)) found = dist[v];
    });
  }
  if (found < 0) return std::nullopt;

  // Lexicographically smallest x -> u path among the closing vertices u.
  thread_local std::vector<Vertex> path, best;
  best.clear();
  for (Vertex u : g.in(x)) {
    if (!alive.test(static_cast<std::size_t>(u)) || unseen.test(static_cast<std::size_t>(u)) ||
        dist[u] != found)
      continue;
    path.resize(static_cast<std::size_t>(found) + 1);
    for (Vertex v = u, i = found; v != -1; v = parent[v], --i) path[static_cast<std::size_t>(i)] = v;
    if (best.empty() || path < best) std::swap(best, path);
  }
  return Cycle{best};
}

}  // namespace

bool is_acyclic(const WeightedDigraph& g) { return is_acyclic(g, all_vertices(g)); }

bool is_acyclic(const WeightedDigraph& g, const VertexBits& alive) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<std::size_t> indeg(n, 0);
  std::vector<Vertex> ready;
  std::size_t total = 0;
  alive.for_each([&](std::size_t v) {
    ++total;
    indeg[v] = g.in_bits(static_cast<Vertex>(v)).count_and(alive);
    if (indeg[v] == 0) ready.push_back(static_cast<Vertex>(v));
  });
  std::size_t removed = 0;
  while (!ready.empty()) {
    const Vertex u = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex v : g.out(u))
      if (alive.test(static_cast<std::size_t>(v)) && --indeg[v] == 0) ready.push_back(v);
  }
  return removed == total;
}

std::optional<Cycle> shortest_cycle_through(const WeightedDigraph& g, Vertex x) {
  require_vertex(g, x);
  return bfs_cycle(g, x, all_vertices(g), std::numeric_limits<std::size_t>::max());
}

std::optional<Cycle> shortest_cycle_through(const WeightedDigraph& g, Vertex x,
                                            const VertexBits& alive) {
  require_vertex(g, x);
  return bfs_cycle(g, x, alive, std::numeric_limits<std::size_t>::max());
}

std::optional<Cycle> girth_cycle(const WeightedDigraph& g) { return girth_cycle(g, all_vertices(g)); }

std::optional<Cycle> girth_cycle(const WeightedDigraph& g, const VertexBits& alive) {
  std::optional<Cycle> best;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.size() && limit > 2; ++v) {
    if (!alive.test(static_cast<std::size_t>(v))) continue;
    auto c = bfs_cycle(g, v, alive, limit - (best ? 1 : 0));
    if (c && (!best || c->length() < best->length())) {
      best = std::move(c);
      limit = best->length();
    }
  }
  return best;
}

Cycle shortest_cycle_in_induced(const WeightedDigraph& g, const Cycle& c) {
  if (!is_cycle_of(g, c)) throw std::invalid_argument("argument is not a cycle of the graph");
  VertexBits mask(static_cast<std::size_t>(g.size()));
  for (Vertex v : c.vertices) mask.set(static_cast<std::size_t>(v));
  return *girth_cycle(g, mask);
}

ReachPartition reach_partition(const WeightedDigraph& g, Vertex x) {
  return reach_partition(g, x, all_vertices(g));
}

ReachPartition reach_partition(const WeightedDigraph& g, Vertex x, const VertexBits& alive) {
  require_vertex(g, x);
  const auto n = static_cast<std::size_t>(g.size());
  VertexBits seen(n);
  std::vector<Vertex> stack{x};
  seen.set(static_cast<std::size_t>(x));
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.out(u)) {
      const auto uv = static_cast<std::size_t>(v);
      if (alive.test(uv) && !seen.test(uv)) {
        seen.set(uv);
        stack.push_back(v);
      }
    }
  }
  ReachPartition p;
  p.pivot = x;
  alive.for_each([&](std::size_t v) {
    if (static_cast<Vertex>(v) == x) return;
    (seen.test(v) ? p.reachable : p.unreachable).push_back(static_cast<Vertex>(v));
  });
  return p;
}

std::optional<Cycle> triangle_through(const WeightedDigraph& t, Vertex x) {
  return triangle_through(t, x, all_vertices(t));
}

std::optional<Cycle> triangle_through(const WeightedDigraph& t, Vertex x, const VertexBits& alive) {
  require_tournament(t);
  require_vertex(t, x);
  if (!alive.test(static_cast<std::size_t>(x))) return std::nullopt;
  for (Vertex b : t.out(x)) {
    if (!alive.test(static_cast<std::size_t>(b))) continue;
    if (auto c = VertexBits::first_common(t.out_bits(b), t.in_bits(x), alive))
      return Cycle{{x, b, static_cast<Vertex>(*c)}};
  }
  return std::nullopt;
}

std::optional<Cycle> triangle_in_set(const WeightedDigraph& t, const TrianglePattern& slots) {
  require_tournament(t);
  std::optional<Cycle> found;
  slots[0].for_each([&](std::size_t a) {
    if (found) return;
    for (Vertex b : t.out(static_cast<Vertex>(a))) {
      if (!slots[1].test(static_cast<std::size_t>(b))) continue;
      if (auto c = VertexBits::first_common(t.out_bits(b), t.in_bits(static_cast<Vertex>(a)),
                                            slots[2])) {
        found = Cycle{{static_cast<Vertex>(a), b, static_cast<Vertex>(*c)}};
        return;
      }
    }
  });
  return found;
}

bool s_acyclic(const WeightedDigraph& t, const VertexSet& s) {
  return s_acyclic(t, s, all_vertices(t));
}

bool s_acyclic(const WeightedDigraph& t, const VertexSet& s, const VertexBits& alive) {
  require_tournament(t);
  for (Vertex x : s)
    if (triangle_through(t, x, alive)) return false;
  return true;
}

DegreePair degrees(const WeightedDigraph& g, Vertex v, const VertexBits& alive) {
  return {g.out_bits(v).count_and(alive), g.in_bits(v).count_and(alive)};
}

Vertex high_inout_vertex(const WeightedDigraph& g, int alpha) {
  return high_inout_vertex(g, alpha, all_vertices(g));
}

Vertex high_inout_vertex(const WeightedDigraph& g, int alpha, const VertexBits& alive) {
  require_alpha(alpha);
  Vertex best = -1;
  std::size_t best_deg = 0;
  alive.for_each([&](std::size_t v) {
    const std::size_t d = degrees(g, static_cast<Vertex>(v), alive).min();
    if (best < 0 || d > best_deg) {
      best = static_cast<Vertex>(v);
      best_deg = d;
    }
  });
  if (best < 0) throw std::invalid_argument("high_inout_vertex on an empty graph");
  return best;
}

bool meets_high_inout_bound(std::size_t d, std::size_t n, int alpha) {
  return 4 * static_cast<std::int64_t>(alpha) * static_cast<std::int64_t>(d) >=
         static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(alpha);
}

std::vector<Vertex> hl_degree_ordering(const WeightedDigraph& g, int alpha) {
  require_alpha(alpha);
  VertexBits alive = all_vertices(g);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) {
    const Vertex v = high_inout_vertex(g, alpha, alive);
    order.push_back(v);
    alive.reset(static_cast<std::size_t>(v));
  }
  return order;
}

bool below_pivot_threshold(std::size_t d, std::size_t n, int alpha) {
  require_alpha(alpha);
  const auto a = static_cast<std::int64_t>(alpha);
  return 36 * a * static_cast<std::int64_t>(d) < 2 * static_cast<std::int64_t>(n) + 9 - 18 * a;
}

namespace {

int max_independent(std::uint32_t candidates, const std::vector<std::uint32_t>& adj) {
  if (candidates == 0) return 0;
  const int v = std::countr_zero(candidates);
  const std::uint32_t rest = candidates & ~(std::uint32_t{1} << v);
  const int with_v = 1 + max_independent(rest & ~adj[v], adj);
  if ((adj[v] & candidates) == 0) return with_v;
  return std::max(with_v, max_independent(rest, adj));
}

}  // namespace

int independence_number_exact(const WeightedDigraph& g, int limit) {
  if (g.size() > limit || g.size() > 32)
    throw InstanceTooLarge("independence number: " + std::to_string(g.size()) +
                           " vertices exceeds exact limit " + std::to_string(limit));
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.size()), 0);
  for (const auto& [u, v] : g.arcs()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  const std::uint32_t all = g.size() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << g.size()) - 1;
  return max_independent(all, adj);
}

}  // namespace fvs
