#include "fvs/local_ratio.hpp"

#include <algorithm>
#include <string>

namespace fvs {

WeightMap::WeightMap(std::vector<Weight> values)
    : values_(std::move(values)), present_(values_.size(), 1) {}

WeightMap::WeightMap(std::size_t universe, std::initializer_list<std::pair<Vertex, Weight>> entries)
    : values_(universe, 0), present_(universe, 0) {
  for (const auto& [v, w] : entries) set(v, w);
}

Weight WeightMap::at(Vertex v) const {
  if (!contains(v)) throw ContractViolation("vertex " + std::to_string(v) + " has no weight");
  return values_[v];
}

VertexSet WeightMap::domain() const {
  VertexSet d;
  for (std::size_t v = 0; v < values_.size(); ++v)
    if (present_[v]) d.push_back(static_cast<Vertex>(v));
  return d;
}

std::size_t WeightMap::domain_size() const noexcept {
  return static_cast<std::size_t>(std::count(present_.begin(), present_.end(), 1));
}

Weight WeightMap::total(const VertexSet& s) const {
  Weight sum = 0;
  for (Vertex v : s) sum = add_weight(sum, at(v));
  return sum;
}

void WeightMap::set(Vertex v, Weight w) {
  if (v < 0 || static_cast<std::size_t>(v) >= values_.size())
    throw ContractViolation("vertex " + std::to_string(v) + " outside weight universe");
  values_[v] = w;
  present_[v] = 1;
}

void WeightMap::erase(Vertex v) {
  if (contains(v)) present_[v] = 0;
}

Vertex WeightMap::heaviest(const VertexSet& q) const {
  if (q.empty()) throw ContractViolation("heaviest of an empty set");
  Vertex best = q.front();
  for (Vertex v : q)
    if (at(v) > at(best) || (at(v) == at(best) && v < best)) best = v;
  return best;
}

Vertex WeightMap::lightest(const VertexSet& q) const {
  if (q.empty()) throw ContractViolation("lightest of an empty set");
  Vertex best = q.front();
  for (Vertex v : q)
    if (at(v) < at(best) || (at(v) == at(best) && v < best)) best = v;
  return best;
}

namespace {

void require_subset(const WeightMap& w, const VertexSet& q, const char* op) {
  for (Vertex v : q)
    if (!w.contains(v))
      throw ContractViolation(std::string(op) + ": vertex " + std::to_string(v) +
                              " is not in the weight domain");
}

WeightMap subtract_on(const WeightMap& w, const VertexSet& q, const char* op) {
  if (q.empty()) throw ContractViolation(std::string(op) + ": empty vertex set");
  require_subset(w, q, op);
  const Weight low = w.at(w.lightest(q));
  WeightMap out = w;
  for (Vertex v : q) out.set(v, w.at(v) - low);
  return out;
}

}  // namespace

WeightMap update1(const WeightMap& w, const VertexSet& q) {
  require_subset(w, q, "update1");
  if (q.empty()) return w;
  const Weight top = w.at(w.heaviest(q));
  WeightMap out = w;
  for (Vertex v : q) out.erase(v);
  for (Vertex v : out.domain()) {
    if (w.at(v) < top)
      throw ContractViolation("update1: vertex " + std::to_string(v) +
                              " is lighter than the heaviest removed vertex");
    out.set(v, w.at(v) - top);
  }
  return out;
}

WeightMap update2(const WeightMap& w, const VertexSet& q) { return subtract_on(w, q, "update2"); }

WeightMap update3(const WeightMap& w, const VertexSet& q, const VertexSet& s) {
  require_subset(w, s, "update3");
  if (!std::includes(s.begin(), s.end(), q.begin(), q.end()))
    throw ContractViolation("update3: q is not a subset of s");
  if (q.empty()) return w;
  const Weight top = w.at(w.heaviest(q));
  WeightMap out = w;
  for (Vertex v : q) out.erase(v);
  for (Vertex v : s) {
    if (!out.contains(v)) continue;
    if (w.at(v) < top)
      throw ContractViolation("update3: terminal " + std::to_string(v) +
                              " is lighter than the heaviest removed vertex");
    out.set(v, w.at(v) - top);
  }
  return out;
}

WeightMap update4(const WeightMap& w, const VertexSet& q) { return subtract_on(w, q, "update4"); }

UndirectedEdgeSet::UndirectedEdgeSet(std::vector<std::pair<Vertex, Vertex>> edges)
    : edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("self-loop in undirected edge set");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

VertexSet UndirectedEdgeSet::endpoints() const {
  VertexSet s;
  for (const auto& [u, v] : edges_) {
    s.push_back(u);
    s.push_back(v);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool UndirectedEdgeSet::covered_by(const VertexSet& cover) const {
  auto in = [&](Vertex v) { return std::binary_search(cover.begin(), cover.end(), v); };
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](const auto& e) { return in(e.first) || in(e.second); });
}

VertexSet vertex_cover_2approx(const UndirectedEdgeSet& edges, const WeightMap& w) {
  const VertexSet ends = edges.endpoints();
  if (ends.empty()) return {};
  for (Vertex v : ends)
    if (!w.contains(v))
      throw ContractViolation("vertex cover: endpoint " + std::to_string(v) + " has no weight");

  const auto universe = static_cast<std::size_t>(ends.back()) + 1;
  std::vector<Weight> residual(universe, 0);
  std::vector<char> zero(universe, 0);
  std::vector<Vertex> order;  // endpoints in the order their residual reached 0
  for (Vertex v : ends) {
    residual[v] = w.at(v);
    if (residual[v] == 0) {
      zero[v] = 1;
      order.push_back(v);
    }
  }
  for (const auto& [u, v] : edges.edges()) {
    if (zero[u] || zero[v]) continue;
    const Weight pay = std::min(residual[u], residual[v]);
    for (Vertex x : {u, v}) {
      residual[x] -= pay;
      if (residual[x] == 0) {
        zero[x] = 1;
        order.push_back(x);
      }
    }
  }

  std::vector<std::vector<Vertex>> nbrs(universe);
  for (const auto& [u, v] : edges.edges()) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  std::vector<char> in_cover = zero;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const bool redundant =
        std::all_of(nbrs[v].begin(), nbrs[v].end(), [&](Vertex u) { return in_cover[u] != 0; });
    if (redundant) in_cover[v] = 0;
  }
  VertexSet cover;
  for (Vertex v : ends)
    if (in_cover[v]) cover.push_back(v);
  return cover;
}

}  // namespace fvs
