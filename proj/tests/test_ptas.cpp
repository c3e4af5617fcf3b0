#include "doctest.h"
#include "helpers.hpp"
#include "localmds/errors.hpp"
#include "localmds/generators.hpp"
#include "localmds/mds.hpp"
#include "localmds/oracle.hpp"
#include "localmds/ptas.hpp"

using namespace localmds;
using namespace localmds::ptas;
using clustering::expansion_const;
using clustering::expansion_planar;

TEST_CASE("refine cannot do worse than an already optimal seed") {
  Graph g = gen::grid(3, 4).graph;
  VertexSet opt = oracle::exact_mds(g);
  VertexSet s = refine(g, opt, Rat(1), Rat(1), Rat(3), expansion_planar());
  CHECK(oracle::is_dominating(g, s));
  CHECK(s.size() <= opt.size());
}

TEST_CASE("refine on C9 from a greedy 3-set") {
  Graph c9 = gen::cycle(9).graph;
  VertexSet d = oracle::greedy_mds(c9);
  CHECK(d.size() == 3);
  CHECK(oracle::gamma(c9) == 3);
  VertexSet s = refine(c9, d, Rat(1), Rat(2), Rat(2), expansion_planar());
  CHECK(oracle::is_dominating(c9, s));
  CHECK(s.size() <= 6);  // (1+1) * gamma
}

TEST_CASE("refine on the 6x6 grid from the lenzen seed") {
  Graph g = gen::grid(6, 6).graph;
  VertexSet d = mds::modified_lenzen(g, Rat(3)).dominating_set;
  RefineOptions opts;
  opts.exact_cap = 36;
  VertexSet s =
      refine(g, d, Rat(1, 2), Rat(199), Rat(3), expansion_planar(), opts);
  CHECK(oracle::is_dominating(g, s));
  CHECK(s.size() <= 15);  // floor(1.5 * gamma), gamma = 10
}

TEST_CASE("refine guarantee (1+eps)*gamma on oracle-solvable planar inputs") {
  std::vector<Graph> corpus{gen::grid(4, 5).graph, gen::cycle(12).graph,
                            gen::random_planar(18, 4).graph,
                            gen::random_tree(20, 8).graph};
  for (const Graph& g : corpus) {
    VertexSet d = mds::modified_lenzen(g, Rat(3)).dominating_set;
    std::size_t gamma = oracle::gamma(g);
    for (Rat eps : {Rat(1), Rat(1, 2)}) {
      VertexSet s = refine(g, d, eps, Rat(199), Rat(3), expansion_planar());
      CHECK(oracle::is_dominating(g, s));
      CHECK(Rat(static_cast<std::int64_t>(s.size())) <=
            (Rat(1) + eps) * Rat(static_cast<std::int64_t>(gamma)));
    }
  }
}

TEST_CASE("refine input validation") {
  Graph g = gen::grid(3, 3).graph;
  CHECK_THROWS_AS(refine(g, {}, Rat(1), Rat(1), Rat(3), expansion_planar()),
                  std::invalid_argument);
  VertexSet opt = oracle::exact_mds(g);
  CHECK_THROWS_AS(refine(g, opt, Rat(0), Rat(1), Rat(3), expansion_planar()),
                  std::invalid_argument);
}

TEST_CASE("refine reports oversized clusters instead of solving them") {
  Graph g = gen::grid(6, 6).graph;  // collapses to one 36-vertex cluster
  VertexSet d = mds::modified_lenzen(g, Rat(3)).dominating_set;
  RefineOptions opts;
  opts.exact_cap = 25;
  CHECK_THROWS_WITH_AS(
      refine(g, d, Rat(1, 2), Rat(199), Rat(3), expansion_planar(), opts),
      doctest::Contains("larger epsilon"), CapExceeded);
}

TEST_CASE("refine surfaces a density warning when nabla1 is understated") {
  Graph g = gen::complete_bipartite(3, 7).graph;
  VertexSet d = oracle::exact_mds(g);  // {one left, one right}
  RefineOptions opts;
  auto rep = refine_report(g, d, Rat(1), Rat(1), Rat(1),
                           expansion_const(Rat(3)), opts);
  CHECK(oracle::is_dominating(g, rep.refined));
  // H on two parts with one connecting edge has density 1/2 <= 1: no
  // warning here; understatement needs a denser part graph.
  Graph grid = gen::grid(4, 4).graph;
  VertexSet gd = mds::modified_lenzen(grid, Rat(3)).dominating_set;
  auto rep2 = refine_report(grid, gd, Rat(1), Rat(199), Rat(1),
                            expansion_planar(), opts);
  CHECK((rep2.density_warning || edge_density(grid) <= Rat(1)));
}

TEST_CASE("refine is deterministic") {
  Graph g = gen::random_planar(20, 12).graph;
  VertexSet d = mds::modified_lenzen(g, Rat(3)).dominating_set;
  VertexSet a = refine(g, d, Rat(1), Rat(199), Rat(3), expansion_planar());
  VertexSet b = refine(g, d, Rat(1), Rat(199), Rat(3), expansion_planar());
  CHECK(a == b);
}
