#include "doctest.h"
#include "helpers.hpp"
#include "localmds/generators.hpp"

using namespace localmds;
using namespace localmds::gen;

TEST_CASE("grid(2,2) is C4") {
  Graph g = grid(2, 2).graph;
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  for (VertexId v : g.vertices()) CHECK(g.degree(v) == 2);
}

TEST_CASE("torus_grid(3,3) satisfies the genus-1 density bound") {
  auto t = torus_grid(3, 3);
  CHECK(t.graph.vertex_count() == 9);
  CHECK(t.graph.edge_count() == 18);
  // |E| <= 3|V| + 6g - 6 with g = 1
  CHECK(t.graph.edge_count() <= 3 * t.graph.vertex_count() + 6 * 1 - 6);
  CHECK(t.info.genus_upper == 1);
  CHECK_THROWS_AS(torus_grid(2, 5), std::invalid_argument);
}

TEST_CASE("every genus-tagged generator output satisfies the density lemma") {
  std::vector<Generated> gs;
  for (std::size_t w = 3; w <= 6; ++w)
    for (std::size_t h = w; h <= 6; ++h) gs.push_back(torus_grid(w, h));
  gs.push_back(complete_bipartite(3, 5));
  gs.push_back(complete_bipartite(3, 7));
  gs.push_back(subdivided_clique(5, 3));
  gs.push_back(subdivided_clique(6, 3));
  for (const auto& g : gs) {
    if (g.graph.vertex_count() < 3) continue;
    CHECK(static_cast<long>(g.graph.edge_count()) <=
          3 * static_cast<long>(g.graph.vertex_count()) +
              6 * g.info.genus_upper - 6);
  }
}

TEST_CASE("subdivided_clique(5,3) counts") {
  Graph g = subdivided_clique(5, 3).graph;
  CHECK(g.vertex_count() == 35);
  CHECK(g.edge_count() == 40);
  for (VertexId v = 0; v < 5; ++v) CHECK(g.degree(v) == 4);
  for (VertexId v = 5; v < 35; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("planar-tagged outputs satisfy the Euler bound") {
  std::vector<Generated> gs;
  for (std::uint64_t s = 0; s < 10; ++s) gs.push_back(random_planar(30, s));
  gs.push_back(random_planar(40, 3, Rat(1, 4)));
  gs.push_back(grid(5, 7));
  gs.push_back(random_tree(25, 1));
  for (const auto& g : gs) {
    CHECK(g.info.planar);
    if (g.graph.vertex_count() >= 3)
      CHECK(g.graph.edge_count() <= 3 * g.graph.vertex_count() - 6);
  }
}

TEST_CASE("random_planar triangulation is maximal before sparsifying") {
  Graph g = random_planar(16, 5).graph;
  CHECK(g.edge_count() == 3 * 16 - 6);
}

TEST_CASE("determinism: same args and seed give the identical edge list") {
  Graph a = random_planar(24, 42).graph;
  Graph b = random_planar(24, 42).graph;
  CHECK(a == b);
  Graph c = random_tree(24, 42).graph;
  Graph d = random_tree(24, 42).graph;
  CHECK(c == d);
  CHECK(!(random_planar(24, 43).graph == a));

  Graph w1 = grid(4, 4).graph, w2 = grid(4, 4).graph;
  seed_edge_weights(w1, 9);
  seed_edge_weights(w2, 9);
  CHECK(w1 == w2);
}

TEST_CASE("class metadata survives the metadata round trip") {
  auto t = torus_grid(4, 5);
  auto md = t.info.to_metadata();
  auto back = ClassInfo::from_metadata(md);
  CHECK(back.planar == t.info.planar);
  CHECK(back.genus_upper == t.info.genus_upper);
  CHECK(back.arboricity_upper == t.info.arboricity_upper);
  CHECK(back.density_c == t.info.density_c);
  CHECK(back.k3t_exclusion_t == t.info.k3t_exclusion_t);
}

TEST_CASE("size validation") {
  CHECK_THROWS_AS(path(0), std::invalid_argument);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(random_planar(2, 1), std::invalid_argument);
}
