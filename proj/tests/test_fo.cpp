#include "doctest.h"
#include "helpers.hpp"
#include "localmds/fo.hpp"
#include "localmds/generators.hpp"
#include "localmds/mds.hpp"
#include "localmds/oracle.hpp"

using namespace localmds;
using namespace localmds::fo;

TEST_CASE("eval atoms and connectives") {
  Graph e = th::make(2, {{0, 1}});
  CHECK(eval(e, edge("x", "y"), {{"x", 0}, {"y", 1}}));
  CHECK(!eval(e, edge("x", "y"), {{"x", 0}, {"y", 0}}));
  CHECK(eval(e, less("x", "y"), {{"x", 0}, {"y", 1}}));
  CHECK(eval(e, eq("x", "x"), {{"x", 1}}));
  CHECK_THROWS_AS(eval(e, edge("x", "z"), {{"x", 0}}), std::invalid_argument);
}

TEST_CASE("quantifiers range over the vertex set") {
  Graph with_isolated = th::make(3, {{0, 1}});
  auto everyone_has_neighbor = forall("x", exists("y", edge("x", "y")));
  CHECK(!eval(with_isolated, everyone_has_neighbor, {}));
  Graph c4 = gen::cycle(4).graph;
  CHECK(eval(c4, everyone_has_neighbor, {}));
}

TEST_CASE("eval on P3: pendant-neighbor formula") {
  Graph p3 = gen::path(3).graph;
  // exists y adjacent to x such that every neighbor of y is x or adjacent
  // to x; true at the middle vertex via a pendant.
  auto phi = exists(
      "y", land({edge("x", "y"),
                 forall("z", implies(edge("y", "z"),
                                     lor({eq("z", "x"), edge("z", "x")})))}));
  CHECK(eval(p3, phi, {{"x", 1}}));
}

TEST_CASE("defined_set basics") {
  Graph g = gen::cycle(5).graph;
  CHECK(defined_set(g, eq("x", "x")) ==
        VertexSet(g.vertices().begin(), g.vertices().end()));
  CHECK_THROWS_AS(defined_set(g, edge("x", "y")), std::invalid_argument);
  CHECK_THROWS_AS(defined_set(g, forall("x", eq("x", "x"))),
                  std::invalid_argument);
}

TEST_CASE("phi_D structure: 2c existentials and a universal implication") {
  FormulaPtr f = build_phi_D(3);
  CHECK(f->kind == Formula::Kind::Not);
  const Formula* cur = f->kids[0].get();
  int existentials = 0;
  while (cur->kind == Formula::Kind::Exists) {
    ++existentials;
    const Formula* body = cur->kids[0].get();
    REQUIRE(body->kind == Formula::Kind::And);
    cur = body->kids.back().get();
  }
  CHECK(existentials == 6);
  REQUIRE(cur->kind == Formula::Kind::Forall);
  CHECK(cur->kids[0]->kind == Formula::Kind::Implies);
}

TEST_CASE("phi_D defines exactly phase1") {
  std::vector<Graph> corpus{gen::star(7).graph,
                            gen::cycle(3).graph,
                            gen::cycle(9).graph,
                            gen::path(10).graph,
                            gen::grid(4, 4).graph,
                            gen::grid(6, 6).graph,
                            gen::complete_bipartite(3, 7).graph,
                            gen::random_tree(12, 2).graph,
                            gen::random_planar(12, 4).graph,
                            gen::torus_grid(3, 5).graph};
  FormulaPtr phi = build_phi_D(3);
  for (const Graph& g : corpus)
    CHECK(defined_set(g, phi) == mds::phase1(g, Rat(3)));
}

TEST_CASE("psi_D' on P3 with D empty: least-id fallback election") {
  Graph p3 = gen::path(3).graph;
  CHECK(mds::phase1(p3, Rat(3)).empty());
  VertexSet dprime = defined_set(p3, build_psi_Dprime(3, 3));
  // Threshold 24: nobody is big, so each undominated y elects the <-least
  // member of N[y]: a and b elect a, c elects b. This differs from
  // phase2's max-residual choice {b}; both unions dominate.
  CHECK(dprime == VertexSet{0, 1});
  VertexSet join = dprime;
  CHECK(oracle::is_dominating(p3, join));
  CHECK(mds::phase2(p3, {}) == VertexSet{1});
}

TEST_CASE("psi_D' is empty when D already dominates") {
  Graph star = gen::star(7).graph;
  CHECK(defined_set(star, build_psi_Dprime(3, 3)).empty());
}

TEST_CASE("D union psi_D' dominates") {
  std::vector<Graph> corpus{gen::star(7).graph,
                            gen::path(7).graph,
                            gen::cycle(8).graph,
                            gen::grid(3, 4).graph,
                            gen::complete_bipartite(3, 5).graph,
                            gen::random_tree(10, 5).graph,
                            gen::random_planar(10, 6).graph};
  FormulaPtr phi = build_phi_D(3);
  FormulaPtr psi = build_psi_Dprime(3, 3);
  for (const Graph& g : corpus) {
    VertexSet d = defined_set(g, phi);
    VertexSet dp = defined_set(g, psi);
    VertexSet all = d;
    all.insert(dp.begin(), dp.end());
    CHECK(oracle::is_dominating(g, all));
  }
}

TEST_CASE("psi_D' handles isolated vertices via self-election") {
  Graph lonely = th::make(3, {{0, 1}});  // vertex 2 is isolated
  VertexSet d = defined_set(lonely, build_phi_D(3));
  CHECK(d.empty());
  VertexSet dp = defined_set(lonely, build_psi_Dprime(3, 3));
  CHECK(dp.count(2) == 1);
  CHECK(oracle::is_dominating(lonely, dp));
}

TEST_CASE("eval is invariant under order-preserving isomorphism") {
  // Same structure, same id order, different construction order.
  Graph a = th::make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  Graph b = th::make(5, {{3, 4}, {2, 3}, {0, 1}, {1, 2}});
  FormulaPtr phi = build_phi_D(2);
  CHECK(defined_set(a, phi) == defined_set(b, phi));
}

TEST_CASE("s-expression round trip") {
  FormulaPtr f = build_phi_D(2);
  FormulaPtr g = parse_sexpr(to_sexpr(f));
  CHECK(to_sexpr(f) == to_sexpr(g));
  Graph p5 = gen::path(5).graph;
  CHECK(defined_set(p5, f) == defined_set(p5, g));

  CHECK_THROWS_AS(parse_sexpr("(bogus x y)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sexpr("(E x"), std::invalid_argument);
  auto h = parse_sexpr("(exists y (and (E x y) (not (= x y))))");
  CHECK(free_variables(h) == std::set<std::string>{"x"});
}
