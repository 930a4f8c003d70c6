#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fvs/bits.hpp"

namespace fvs {

using Vertex = int;
using Weight = std::uint64_t;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using Arc = std::pair<Vertex, Vertex>;

// A caller broke a documented precondition (negative weight would result,
// set not contained in a domain, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exact routine was asked to solve an instance above its size limit.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InducedSubgraph;

// Simple vertex-weighted digraph on dense ids 0..n-1. Immutable once built.
// Digons (u->v and v->u) are allowed unless the graph is flagged as a
// tournament.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  // Throws std::invalid_argument on self-loops, duplicate arcs, out-of-range
  // ids, a weight vector of the wrong length, or a `tournament` flag that the
  // arc set does not satisfy.
  WeightedDigraph(int n, std::span<const Arc> arcs, std::vector<Weight> weights,
                  bool tournament = false);
  WeightedDigraph(int n, std::span<const Arc> arcs, bool tournament = false);

  int size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  bool has_arc(Vertex u, Vertex v) const noexcept { return out_bits_[u].test(v); }
  bool adjacent(Vertex u, Vertex v) const noexcept { return has_arc(u, v) || has_arc(v, u); }

  std::span<const Vertex> out(Vertex v) const noexcept {
    return {out_list_.data() + out_off_[v], out_off_[v + 1] - out_off_[v]};
  }
  std::span<const Vertex> in(Vertex v) const noexcept {
    return {in_list_.data() + in_off_[v], in_off_[v + 1] - in_off_[v]};
  }
  const VertexBits& out_bits(Vertex v) const noexcept { return out_bits_[v]; }
  const VertexBits& in_bits(Vertex v) const noexcept { return in_bits_[v]; }

  Weight weight(Vertex v) const noexcept { return weights_[v]; }
  const std::vector<Weight>& weights() const noexcept { return weights_; }

  std::size_t arc_count() const noexcept { return arc_count_; }
  // Arcs in ascending (tail, head) order.
  std::vector<Arc> arcs() const;

  // Structural check: exactly one arc between every pair.
  bool is_tournament() const noexcept { return tournament_; }
  // Whether the tournament flag was requested at construction (and verified).
  bool flagged_tournament() const noexcept { return flagged_; }

  WeightedDigraph with_weights(std::vector<Weight> weights) const&;
  WeightedDigraph with_weights(std::vector<Weight> weights) &&;

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.n_ == b.n_ && a.flagged_ == b.flagged_ && a.weights_ == b.weights_ &&
           a.out_bits_ == b.out_bits_;
  }

  friend InducedSubgraph induced_subgraph(const WeightedDigraph& g, const VertexBits& keep);

 private:
  // Adjacency lists, arc count and tournament test from the bit rows.
  void index_rows();

  int n_ = 0;
  std::size_t arc_count_ = 0;
  bool tournament_ = true;
  bool flagged_ = false;
  // Sorted adjacency lists, CSR layout: out(v) = out_list_[out_off_[v] .. out_off_[v+1]).
  std::vector<Vertex> out_list_;
  std::vector<std::size_t> out_off_{0};
  std::vector<Vertex> in_list_;
  std::vector<std::size_t> in_off_{0};
  std::vector<VertexBits> out_bits_;
  std::vector<VertexBits> in_bits_;
  std::vector<Weight> weights_;
};

// Induced subgraph with the map back to the parent's ids. `to_parent` is
// ascending, so relative vertex order is preserved.
struct InducedSubgraph {
  WeightedDigraph graph;
  std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const WeightedDigraph& g, const VertexSet& keep);
InducedSubgraph induced_subgraph(const WeightedDigraph& g, const VertexBits& keep);

// Directed cycle <x1..xk>, arcs x_i -> x_{i+1} and x_k -> x_1.
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  bool contains(Vertex v) const noexcept;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

bool is_cycle_of(const WeightedDigraph& g, const Cycle& c);

struct ReachPartition {
  Vertex pivot = -1;
  VertexSet reachable;
  VertexSet unreachable;
};

VertexBits all_vertices(const WeightedDigraph& g);
VertexBits to_bits(std::size_t n, const VertexSet& s);
VertexSet to_set(const VertexBits& b);
Weight total_weight(const WeightedDigraph& g, const VertexSet& s);
// Checked sum; throws std::overflow_error.
Weight add_weight(Weight a, Weight b);

// Every operation below has an overload restricted to the subgraph induced by
// `alive`. Vertices outside `alive` are treated as deleted.

bool is_acyclic(const WeightedDigraph& g);
bool is_acyclic(const WeightedDigraph& g, const VertexBits& alive);

// BFS from x with neighbours taken in ascending id order; among shortest
// cycles the one with the lexicographically smallest sequence starting at x.
std::optional<Cycle> shortest_cycle_through(const WeightedDigraph& g, Vertex x);
std::optional<Cycle> shortest_cycle_through(const WeightedDigraph& g, Vertex x,
                                            const VertexBits& alive);

// Shortest directed cycle of the whole (alive) graph; first minimum over
// ascending start vertices.
std::optional<Cycle> girth_cycle(const WeightedDigraph& g);
std::optional<Cycle> girth_cycle(const WeightedDigraph& g, const VertexBits& alive);

// Shortest cycle of g[c]. A shortest cycle has no chord, so it is induced.
// Throws std::invalid_argument if c is not a cycle of g.
Cycle shortest_cycle_in_induced(const WeightedDigraph& g, const Cycle& c);

ReachPartition reach_partition(const WeightedDigraph& g, Vertex x);
ReachPartition reach_partition(const WeightedDigraph& g, Vertex x, const VertexBits& alive);

// Lexicographically first triangle <x,b,c> through x. Throws
// std::invalid_argument if t is not a tournament.
std::optional<Cycle> triangle_through(const WeightedDigraph& t, Vertex x);
std::optional<Cycle> triangle_through(const WeightedDigraph& t, Vertex x, const VertexBits& alive);

// Per-slot membership: finds a -> b -> c -> a with a in slots[0], b in
// slots[1], c in slots[2]; lexicographically first (a, b, c).
using TrianglePattern = std::array<VertexBits, 3>;
std::optional<Cycle> triangle_in_set(const WeightedDigraph& t, const TrianglePattern& slots);

// No directed cycle of t[alive] passes through a vertex of s. Uses the fact
// that in a tournament a shortest cycle through any vertex is a triangle.
bool s_acyclic(const WeightedDigraph& t, const VertexSet& s);
bool s_acyclic(const WeightedDigraph& t, const VertexSet& s, const VertexBits& alive);

struct DegreePair {
  std::size_t out = 0;
  std::size_t in = 0;
  std::size_t min() const noexcept { return out < in ? out : in; }
};
DegreePair degrees(const WeightedDigraph& g, Vertex v, const VertexBits& alive);

// Vertex maximising min(out-degree, in-degree); lowest id on ties.
Vertex high_inout_vertex(const WeightedDigraph& g, int alpha);
Vertex high_inout_vertex(const WeightedDigraph& g, int alpha, const VertexBits& alive);

// 4*alpha*d >= n - 2*alpha, i.e. d >= (n - 2 alpha) / (4 alpha).
bool meets_high_inout_bound(std::size_t d, std::size_t n, int alpha);

std::vector<Vertex> hl_degree_ordering(const WeightedDigraph& g, int alpha);

// Pivot rejection rule d < n/(18a) + 1/(4a) - 1/2, evaluated as
// 36*a*d < 2n + 9 - 18a.
bool below_pivot_threshold(std::size_t d, std::size_t n, int alpha);

// Largest set with no arc in either direction between its members.
int independence_number_exact(const WeightedDigraph& g, int limit = 20);

}  // namespace fvs
