#include <random>

#include "doctest.h"
#include "fvs/exact.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fvs;
using testutil::digraph;

TEST_CASE("exact_fvs examples") {
  CHECK(exact_fvs(testutil::transitive_tournament(6)).vertices.empty());
  const auto tri = digraph(3, {{0, 1}, {1, 2}, {2, 0}}, {1, 2, 3});
  const Solution s = exact_fvs(tri);
  CHECK(s.vertices == VertexSet{0});
  CHECK(s.weight == 1);
  CHECK(s.valid);
  const auto two = digraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(exact_fvs(two).weight == 2);
  CHECK_THROWS_AS(exact_fvs(digraph(16, {})), InstanceTooLarge);
  CHECK_NOTHROW(exact_fvs(digraph(16, {}), 16));
}

TEST_CASE("exact_fvs agrees with subset scan") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 120; ++i) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const auto g = (i % 2) ? testutil::random_digraph(rng, n, 0.3, 9) : testutil::random_tournament(rng, n, 9);
    const Solution s = exact_fvs(g);
    CHECK(oracle::acyclic(g, oracle::keep_mask(n, s.vertices)));
    CHECK(s.weight == oracle::min_fvs_weight(g));
    CHECK(s.weight == total_weight(g, s.vertices));
  }
}

TEST_CASE("exact_fvs result is minimal where it matters") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 40; ++i) {
    const auto g = testutil::random_tournament(rng, 9, 5);
    const Solution s = exact_fvs(g);
    for (Vertex v : s.vertices) {
      VertexSet smaller;
      for (Vertex u : s.vertices)
        if (u != v) smaller.push_back(u);
      // Dropping a vertex either breaks feasibility or it had weight zero.
      CHECK((!is_fvs(g, smaller) || g.weight(v) == 0));
    }
  }
}

TEST_CASE("exact_sfvs examples and agreement") {
  std::mt19937_64 first(7);
  const auto t = testutil::random_tournament(first, 8, 4);
  CHECK(exact_sfvs({t, {}}).vertices.empty());
  VertexSet all(8);
  for (int v = 0; v < 8; ++v) all[v] = v;
  CHECK(exact_sfvs({t, all}).weight == exact_fvs(t).weight);

  std::mt19937_64 rng(33);
  for (int i = 0; i < 100; ++i) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const auto tt = testutil::random_tournament(rng, n, 6);
    const auto s = testutil::random_subset(rng, n, 0.4);
    const SfvsInstance inst{tt, s};
    const Solution sol = exact_sfvs(inst);
    CHECK(oracle::s_acyclic(tt, s, oracle::keep_mask(n, sol.vertices)));
    CHECK(sol.weight == oracle::min_sfvs_weight(tt, s));
  }
}

TEST_CASE("exact_vertex_cover") {
  CHECK(exact_vertex_cover(UndirectedEdgeSet(), WeightMap({1, 1})).empty());
  const UndirectedEdgeSet star({{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(exact_vertex_cover(star, WeightMap(std::vector<Weight>(5, 1))) == VertexSet{0});
  std::vector<std::pair<Vertex, Vertex>> big;
  for (int v = 1; v < 22; ++v) big.emplace_back(0, v);
  CHECK_THROWS_AS(exact_vertex_cover(UndirectedEdgeSet(big), WeightMap(std::vector<Weight>(22, 1))),
                  InstanceTooLarge);
}
