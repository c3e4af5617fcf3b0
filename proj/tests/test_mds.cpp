#include "doctest.h"
#include "helpers.hpp"
#include "localmds/generators.hpp"
#include "localmds/mds.hpp"
#include "localmds/mds_programs.hpp"
#include "localmds/oracle.hpp"

using namespace localmds;
using namespace localmds::mds;

TEST_CASE("coverable examples") {
  Graph star7 = gen::star(7).graph;
  CHECK(!coverable(star7, 0, 6));  // seven pairwise non-adjacent leaves
  CHECK(coverable(star7, 0, 7));   // monotone in the budget
  CHECK(coverable(star7, 1, 1));

  Graph tri = gen::cycle(3).graph;
  for (VertexId v : tri.vertices()) CHECK(coverable(tri, v, 1));

  Graph grid = gen::grid(6, 6).graph;
  CHECK(coverable(grid, 14, 4));  // interior vertex, A = N(v)
  CHECK_THROWS_AS(coverable(grid, 99, 3), std::invalid_argument);
}

TEST_CASE("coverable threshold monotonicity") {
  Graph g = gen::random_planar(16, 5).graph;
  for (VertexId v : g.vertices())
    for (int k = 0; k < 6; ++k)
      if (coverable(g, v, k)) CHECK(coverable(g, v, k + 1));
}

TEST_CASE("phase1 examples") {
  CHECK(phase1(gen::star(7).graph, Rat(3)) == VertexSet{0});
  CHECK(phase1(gen::grid(6, 6).graph, Rat(3)).empty());
  CHECK(phase1(gen::complete_bipartite(3, 7).graph, Rat(3)).empty());
}

TEST_CASE("phase2 examples") {
  Graph star7 = gen::star(7).graph;
  CHECK(phase2(star7, {0}).empty());  // N[D] = V

  Graph p3 = gen::path(3).graph;
  CHECK(phase2(p3, {}) == VertexSet{1});  // b has residual 3

  Graph two_edges = th::make(4, {{0, 1}, {2, 3}});
  CHECK(phase2(two_edges, {}) == VertexSet{0, 2});  // ties to smaller ids
}

TEST_CASE("modified_lenzen examples") {
  auto star = modified_lenzen(gen::star(7).graph, Rat(3));
  CHECK(star.dominating_set == VertexSet{0});
  CHECK(oracle::ratio(gen::star(7).graph, star.dominating_set) == Rat(1));

  Graph c6 = gen::cycle(6).graph;
  auto rc6 = modified_lenzen(c6, Rat(3));
  CHECK(oracle::is_dominating(c6, rc6.dominating_set));
  CHECK(rc6.dominating_set.size() <= 6);
  CHECK(rc6.dominating_set.size() >= 2);  // gamma(C6) = 2
  CHECK(oracle::gamma(c6) == 2);

  Graph grid = gen::grid(6, 6).graph;
  auto rg = modified_lenzen(grid, Rat(3));
  CHECK(oracle::is_dominating(grid, rg.dominating_set));
  CHECK(rg.phase1_set.empty());
  // gamma of the 6x6 grid is 10; the planar guarantee is ratio <= 199.
  CHECK(oracle::gamma(grid, 36) == 10);
  CHECK(oracle::ratio(grid, rg.dominating_set, 36) <= Rat(199));
}

TEST_CASE("result parts always form the dominating set") {
  for (std::uint64_t s : {1, 2, 3, 4, 5}) {
    Graph g = gen::random_planar(30, s).graph;
    auto r = modified_lenzen(g, Rat(3));
    VertexSet u = r.phase1_set;
    u.insert(r.preprocessing_set.begin(), r.preprocessing_set.end());
    u.insert(r.phase2_set.begin(), r.phase2_set.end());
    CHECK(u == r.dominating_set);
    CHECK(oracle::is_dominating(g, r.dominating_set));
  }
}

TEST_CASE("phase-1 lemma bound |D| <= (c+1)*gamma on small planar instances") {
  std::vector<Graph> corpus{gen::star(7).graph, gen::path(9).graph,
                            gen::grid(3, 4).graph,
                            gen::random_tree(12, 6).graph,
                            gen::random_planar(12, 8).graph};
  for (const Graph& g : corpus) {
    std::size_t d = phase1(g, Rat(3)).size();
    CHECK(Rat(static_cast<std::int64_t>(d)) <=
          Rat(4) * Rat(static_cast<std::int64_t>(oracle::gamma(g))));
  }
}

TEST_CASE("genus_density_c") {
  CHECK(genus_density_c(0) == 3);
  CHECK(genus_density_c(1) == 5);
  CHECK(genus_density_c(2) == 8);  // ceil(5*sqrt(2))
  CHECK_THROWS_AS(genus_density_c(-1), std::invalid_argument);
}

TEST_CASE("genus_algorithm on planar inputs equals modified_lenzen(g, 3)") {
  for (std::uint64_t s : {2, 5}) {
    Graph g = gen::random_planar(24, s).graph;
    auto a = genus_algorithm(g, 0);
    auto b = modified_lenzen(g, Rat(3));
    CHECK(a.dominating_set == b.dominating_set);
    CHECK(a.phase1_set == b.phase1_set);
    CHECK(a.phase2_set == b.phase2_set);
    CHECK(a.preprocessing_set.empty());
  }
}

TEST_CASE("genus_algorithm on K_{3,3}") {
  Graph k33 = gen::complete_bipartite(3, 3).graph;
  auto r = genus_algorithm(k33, 1);
  CHECK(oracle::is_dominating(k33, r.dominating_set));
  CHECK(oracle::gamma(k33) == 2);
  // Either phase 2 finishes the job or one canonical K_{3,3} was absorbed.
  if (!r.preprocessing_set.empty()) CHECK(r.preprocessing_set.size() == 6);
}

TEST_CASE("genus_algorithm on torus grids dominates within the paper bound") {
  for (auto [w, h] : std::vector<std::pair<std::size_t, std::size_t>>{
           {3, 3}, {3, 6}, {4, 5}}) {
    Graph t = gen::torus_grid(w, h).graph;
    auto r = genus_algorithm(t, 1);
    CHECK(oracle::is_dominating(t, r.dominating_set));
    // 6c^2t + (2t+5)c + 4 with c = 5, t = 3, plus 24 for preprocessing.
    Rat bound(6 * 25 * 3 + 11 * 5 + 4 + 24);
    CHECK(oracle::ratio(t, r.dominating_set) <= bound);
  }
}

TEST_CASE("genus_algorithm rejects negative genus") {
  CHECK_THROWS_AS(genus_algorithm(gen::cycle(4).graph, -1),
                  std::invalid_argument);
}

TEST_CASE("simulated modified_lenzen agrees with the direct run") {
  std::vector<Graph> corpus{gen::star(7).graph,
                            gen::cycle(6).graph,
                            gen::path(9).graph,
                            gen::grid(4, 4).graph,
                            gen::grid(5, 5).graph,
                            gen::random_planar(18, 3).graph,
                            gen::random_tree(14, 9).graph,
                            gen::complete_bipartite(3, 7).graph};
  for (const Graph& g : corpus) {
    auto direct = modified_lenzen(g, Rat(3));
    auto simulated = simulate_modified_lenzen(g, Rat(3));
    CHECK(direct.dominating_set == simulated.dominating_set);
    CHECK(direct.phase1_set == simulated.phase1_set);
    CHECK(direct.phase2_set == simulated.phase2_set);
    CHECK(simulated.rounds_used == 6);
  }
}

TEST_CASE("simulated genus algorithm agrees on small genus-1 inputs") {
  for (Graph g : {gen::complete_bipartite(3, 3).graph,
                  gen::torus_grid(3, 3).graph}) {
    auto direct = genus_algorithm(g, 1);
    auto simulated = simulate_genus(g, 1);
    CHECK(direct.dominating_set == simulated.dominating_set);
    CHECK(direct.preprocessing_set == simulated.preprocessing_set);
  }
}

TEST_CASE("modified-Lenzen node program is 5-local (audit at radius 5)") {
  Graph g = gen::grid(8, 8).graph;
  CHECK(sim::audit_locality(g, modified_lenzen_program(Rat(3)), 0, 5, 8, 17));
}
