#include "doctest.h"
#include "helpers.hpp"
#include "localmds/generators.hpp"

using namespace localmds;

TEST_CASE("construction enforces the simple-graph invariants") {
  CHECK_THROWS_AS(th::make(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(th::make(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(th::make(2, {{0, 5}}), std::invalid_argument);
  Graph g = th::make(3, {{0, 1}, {1, 2}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK_THROWS_AS(g.set_vertex_weight(0, Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(g.set_edge_weight(0, 2, Rat(1)), std::invalid_argument);
}

TEST_CASE("ball examples") {
  Graph path = th::make(3, {{0, 1}, {1, 2}});
  CHECK(ball(path, 0, 0) == VertexSet{0});
  CHECK(ball(path, 0, 1) == VertexSet{0, 1});
  CHECK_THROWS_AS(ball(path, 9, 1), std::invalid_argument);

  Graph grid = gen::grid(6, 6).graph;
  VertexId center = 2 * 6 + 2;
  CHECK(ball(grid, center, 2).size() == 13);
  CHECK(ball(grid, center, 2) == th::ball_oracle(grid, center, 2));
}

TEST_CASE("ball monotonicity") {
  Graph g = gen::random_planar(20, 7).graph;
  for (VertexId v : g.vertices())
    for (unsigned r = 0; r < 4; ++r) {
      VertexSet a = ball(g, v, r), b = ball(g, v, r + 1);
      CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
}

TEST_CASE("contract_stars: triangle with two stars") {
  Graph tri = th::make(3, {{0, 1}, {1, 2}, {0, 2}});
  StarPartition p = contract_stars(tri, {{0, {1}}, {2, {}}});
  CHECK(p.quotient.vertex_count() == 2);
  CHECK(p.quotient.edge_count() == 1);
  // Both 0-2 and 1-2 cross the two stars.
  CHECK(p.quotient.edge_weight(0, 1) == Rat(2));
  CHECK(p.quotient.vertex_weight(0) == Rat(2));
}

TEST_CASE("contract_stars: identity contraction") {
  Graph g = gen::grid(3, 3).graph;
  std::vector<Star> singles;
  for (VertexId v : g.vertices()) singles.push_back({v, {}});
  StarPartition p = contract_stars(g, singles);
  CHECK(p.quotient == g);
}

TEST_CASE("contract_stars: full star collapses to a point") {
  Graph k15 = gen::star(5).graph;
  StarPartition p = contract_stars(k15, {{0, {1, 2, 3, 4, 5}}});
  CHECK(p.quotient.vertex_count() == 1);
  CHECK(p.quotient.edge_count() == 0);
}

TEST_CASE("contract_stars rejects bad partitions naming the star") {
  Graph tri = th::make(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_THROWS_WITH_AS(contract_stars(tri, {{0, {1}}, {1, {2}}}),
                       doctest::Contains("overlaps"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(contract_stars(tri, {{0, {1}}}),
                       doctest::Contains("cover"), std::invalid_argument);
  Graph p3 = th::make(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_WITH_AS(contract_stars(p3, {{0, {2}}, {1, {}}}),
                       doctest::Contains("not adjacent"), std::invalid_argument);
}

TEST_CASE("crossing weight conservation under contraction") {
  Graph g = gen::torus_grid(3, 4).graph;
  gen::seed_edge_weights(g, 11);
  std::vector<Star> stars;
  VertexSet used;
  for (VertexId v : g.vertices()) {
    if (used.count(v)) continue;
    VertexSet leaves;
    for (VertexId w : g.neighbors(v))
      if (!used.count(w) && w > v) {
        leaves.insert(w);
        used.insert(w);
        break;
      }
    used.insert(v);
    stars.push_back({v, leaves});
  }
  StarPartition p = contract_stars(g, stars);
  Rat intra(0);
  for (const Edge& e : g.edges())
    if (p.star_of.at(e.u) == p.star_of.at(e.v)) intra += g.edge_weight(e.u, e.v);
  CHECK(p.quotient.total_edge_weight() == g.total_edge_weight() - intra);
  CHECK(p.quotient.vertex_count() == stars.size());
}

TEST_CASE("edge_density examples") {
  Graph k4 = th::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(edge_density(k4) == Rat(3, 2));
  Graph tree = gen::random_tree(17, 3).graph;
  CHECK(edge_density(tree) == Rat(16, 17));
  CHECK(edge_density(gen::complete_bipartite(3, 3).graph) == Rat(3, 2));
  CHECK_THROWS_AS(edge_density(Graph{}), std::invalid_argument);
}

TEST_CASE("degeneracy_bound: exact flow result matches subset enumeration") {
  Graph k4 = th::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto r = degeneracy_bound(k4);
  CHECK(r.exact);
  CHECK(r.value == Rat(3, 2));

  Graph p5 = th::make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(degeneracy_bound(p5).value == Rat(4, 5));
  CHECK(degeneracy_bound(p5).value == th::density_oracle(p5));

  Graph k33 = gen::complete_bipartite(3, 3).graph;
  CHECK(degeneracy_bound(k33).value == Rat(3, 2));
  CHECK(degeneracy_bound(k33).value == th::density_oracle(k33));

  for (std::uint64_t seed : {1, 2, 3}) {
    Graph g = gen::random_planar(9, seed).graph;
    CHECK(degeneracy_bound(g).value == th::density_oracle(g));
  }
}

TEST_CASE("degeneracy_bound above the cap degrades to a flagged bound") {
  Graph g = gen::grid(10, 10).graph;
  auto r = degeneracy_bound(g, 50);
  CHECK(!r.exact);
  auto exact = degeneracy_bound(g, 128);
  CHECK(exact.exact);
  CHECK(exact.value <= r.value);           // peeling order upper-bounds
  CHECK(r.value <= Rat(2) * exact.value);  // within factor 2
}

TEST_CASE("induced and without") {
  Graph g = gen::cycle(6).graph;
  Graph h = g.without({0});
  CHECK(h.vertex_count() == 5);
  CHECK(h.edge_count() == 4);
  CHECK(h.has_vertex(5));
  CHECK(!h.has_edge(5, 0));
}
