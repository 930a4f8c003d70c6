#include <random>

#include "doctest.h"
#include "fvs/exact.hpp"
#include "fvs/local_ratio.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fvs;

namespace {

// a=0, b=1, c=2, d=3
WeightMap map4(Weight a, Weight b, Weight c, Weight d) { return WeightMap({a, b, c, d}); }

}  // namespace

TEST_CASE("WeightMap basics") {
  WeightMap w(5, {{1, 4}, {3, 2}});
  CHECK(w.contains(1));
  CHECK_FALSE(w.contains(0));
  CHECK_FALSE(w.contains(7));
  CHECK(w.at(3) == 2);
  CHECK_THROWS_AS(w.at(0), ContractViolation);
  CHECK(w.domain() == VertexSet{1, 3});
  CHECK(w.domain_size() == 2);
  CHECK(w.total({1, 3}) == 6);
  CHECK(w.lightest({1, 3}) == 3);
  CHECK(w.heaviest({1, 3}) == 1);
  WeightMap ties({5, 5, 5});
  CHECK(ties.lightest({2, 0, 1}) == 0);
  CHECK(ties.heaviest({2, 1}) == 1);
}

TEST_CASE("update1") {
  const WeightMap out = update1(map4(1, 2, 5, 7), {0, 1});
  CHECK(out.domain() == VertexSet{2, 3});
  CHECK(out.at(2) == 3);
  CHECK(out.at(3) == 5);

  const WeightMap eq = update1(WeightMap({4, 4, 4, 4}), {0});
  for (Vertex v : eq.domain()) CHECK(eq.at(v) == 0);

  // A vertex outside q lighter than the heaviest of q breaks the contract.
  CHECK_THROWS_AS(update1(map4(5, 1, 9, 9), {0}), ContractViolation);
  CHECK_THROWS_AS(update1(WeightMap(3, {{0, 1}}), {1}), ContractViolation);
}

TEST_CASE("update1 matches formula on random maps") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto vals = testutil::random_weights(rng, 10, 20);
    const WeightMap w(vals);
    std::vector<Vertex> order(10);
    for (int v = 0; v < 10; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return vals[a] < vals[b]; });
    VertexSet q{order[0], order[1]};
    std::sort(q.begin(), q.end());
    const Weight h = std::max(vals[q[0]], vals[q[1]]);
    const WeightMap out = update1(w, q);
    for (Vertex v = 0; v < 10; ++v) {
      if (v == q[0] || v == q[1]) {
        CHECK_FALSE(out.contains(v));
      } else {
        CHECK(out.at(v) == vals[v] - h);
      }
    }
  }
}

TEST_CASE("update2 and update4") {
  const WeightMap w({5, 3, 7});
  const WeightMap out = update2(w, {0, 1});
  CHECK(out.at(0) == 2);
  CHECK(out.at(1) == 0);
  CHECK(out.at(2) == 7);
  CHECK(update2(w, {2}).at(2) == 0);
  CHECK(update2(out, {0, 1}) == out);
  CHECK_THROWS_AS(update2(w, {}), ContractViolation);

  const WeightMap bc(3, {{1, 3}, {2, 7}});
  const WeightMap o4 = update4(bc, {1, 2});
  CHECK(o4.at(1) == 0);
  CHECK(o4.at(2) == 4);
  const WeightMap pair({6, 6});
  const WeightMap z = update4(pair, {0, 1});
  CHECK(z.at(0) == 0);
  CHECK(z.at(1) == 0);
  CHECK(update4(w, {0, 2}) == update2(w, {0, 2}));
}

TEST_CASE("update3") {
  // s = {a,b,c}, w = {a:1,b:4,c:4,d:2}, q = {a}
  const WeightMap out = update3(map4(1, 4, 4, 2), {0}, {0, 1, 2});
  CHECK(out.domain() == VertexSet{1, 2, 3});
  CHECK(out.at(1) == 3);
  CHECK(out.at(2) == 3);
  CHECK(out.at(3) == 2);

  const WeightMap all = update3(map4(1, 4, 4, 2), {0, 1, 2}, {0, 1, 2});
  CHECK(all.domain() == VertexSet{3});
  CHECK(all.at(3) == 2);

  CHECK_THROWS_AS(update3(map4(1, 4, 4, 2), {3}, {0, 1, 2}), ContractViolation);
  CHECK_THROWS_AS(update3(map4(5, 4, 4, 2), {0}, {0, 1, 2}), ContractViolation);
}

TEST_CASE("update3 matches formula on random maps") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto vals = testutil::random_weights(rng, 10, 20);
    auto s = testutil::random_subset(rng, 10, 0.6);
    if (s.size() < 2) continue;
    std::vector<Vertex> order = s;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return vals[a] < vals[b]; });
    VertexSet q(order.begin(), order.begin() + 1);
    const Weight h = vals[q[0]];
    const WeightMap out = update3(WeightMap(vals), q, s);
    for (Vertex v = 0; v < 10; ++v) {
      const bool in_s = std::find(s.begin(), s.end(), v) != s.end();
      if (v == q[0]) CHECK_FALSE(out.contains(v));
      else if (in_s) CHECK(out.at(v) == vals[v] - h);
      else CHECK(out.at(v) == vals[v]);
    }
  }
}

TEST_CASE("vertex_cover_2approx") {
  WeightMap w({1, 3});
  CHECK(vertex_cover_2approx(UndirectedEdgeSet({{0, 1}}), w) == VertexSet{0});
  CHECK(vertex_cover_2approx(UndirectedEdgeSet(), w).empty());
  CHECK_THROWS_AS(UndirectedEdgeSet({{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(vertex_cover_2approx(UndirectedEdgeSet({{0, 5}}), w), ContractViolation);

  const UndirectedEdgeSet e({{3, 1}, {1, 3}, {0, 2}});
  CHECK(e.size() == 2);
  CHECK(e.endpoints() == VertexSet{0, 1, 2, 3});
  CHECK(e.covered_by({1, 2}));
  CHECK_FALSE(e.covered_by({1}));
}

TEST_CASE("vertex cover ratio against subset scan") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const int n = 12;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::bernoulli_distribution p(0.25);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (p(rng)) edges.emplace_back(u, v);
    const auto vals = testutil::random_weights(rng, n, 10);
    const UndirectedEdgeSet es(edges);
    const VertexSet cover = vertex_cover_2approx(es, WeightMap(vals));
    CHECK(es.covered_by(cover));
    Weight cw = 0;
    for (Vertex v : cover) cw += vals[v];
    const Weight opt = oracle::min_cover_weight(n, edges, vals);
    CHECK(cw <= 2 * opt);
    const VertexSet exact = exact_vertex_cover(es, WeightMap(vals));
    CHECK(es.covered_by(exact));
    Weight ew = 0;
    for (Vertex v : exact) ew += vals[v];
    CHECK(ew == opt);
  }
}

TEST_CASE("telescoping identity") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const auto vals = testutil::random_weights(rng, 8, 30);
    auto q = testutil::random_subset(rng, 8, 0.4);
    if (q.empty()) q.push_back(0);
    const auto f = testutil::random_subset(rng, 8, 0.5);
    const WeightMap w(vals);
    const WeightMap after = update2(w, q);
    const Weight low = w.at(w.lightest(q));
    std::size_t overlap = 0;
    for (Vertex v : f) overlap += std::count(q.begin(), q.end(), v);
    CHECK(w.total(f) == after.total(f) + overlap * low);
    bool zero = false;
    for (Vertex v : q) zero = zero || after.at(v) == 0;
    CHECK(zero);
  }
}
