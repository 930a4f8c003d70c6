#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "fvs/graph.hpp"

namespace fvs {

// Nonnegative integer weights over a subset (the domain) of the vertex ids
// 0..universe-1. Values are copied on update; the updates never mutate their
// argument.
class WeightMap {
 public:
  WeightMap() = default;
  // Every id in 0..values.size()-1 is in the domain.
  explicit WeightMap(std::vector<Weight> values);
  WeightMap(std::size_t universe, std::initializer_list<std::pair<Vertex, Weight>> entries);

  std::size_t universe() const noexcept { return values_.size(); }
  bool contains(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < values_.size() && present_[v];
  }
  // Throws ContractViolation for ids outside the domain.
  Weight at(Vertex v) const;
  VertexSet domain() const;
  std::size_t domain_size() const noexcept;
  Weight total(const VertexSet& s) const;

  void set(Vertex v, Weight w);
  void erase(Vertex v);

  // Lowest-id vertex of maximum / minimum weight in q.
  Vertex heaviest(const VertexSet& q) const;
  Vertex lightest(const VertexSet& q) const;

  friend bool operator==(const WeightMap&, const WeightMap&) = default;

 private:
  std::vector<Weight> values_;
  std::vector<char> present_;
};

// Domain loses q; every other vertex drops by the weight of the heaviest
// member of q. Requires every remaining vertex to weigh at least that much.
WeightMap update1(const WeightMap& w, const VertexSet& q);

// Members of q drop by the minimum weight in q; nothing else changes.
WeightMap update2(const WeightMap& w, const VertexSet& q);

// Terminal-aware variant of update1: domain loses q, only s \ q is reduced.
WeightMap update3(const WeightMap& w, const VertexSet& q, const VertexSet& s);

// Same contract as update2.
WeightMap update4(const WeightMap& w, const VertexSet& q);

// Unordered edges stored as (min, max), sorted, duplicates removed.
class UndirectedEdgeSet {
 public:
  UndirectedEdgeSet() = default;
  // Throws std::invalid_argument on a self-loop.
  explicit UndirectedEdgeSet(std::vector<std::pair<Vertex, Vertex>> edges);

  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  bool empty() const noexcept { return edges_.empty(); }
  std::size_t size() const noexcept { return edges_.size(); }
  VertexSet endpoints() const;
  bool covered_by(const VertexSet& cover) const;

 private:
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

// Local-ratio 2-approximate minimum weight vertex cover: one pass over the
// edges in ascending order paying min(residual) on both endpoints, then a
// reverse-delete prune of the zero-residual endpoints.
VertexSet vertex_cover_2approx(const UndirectedEdgeSet& edges, const WeightMap& w);

}  // namespace fvs
