#include "doctest.h"
#include "helpers.hpp"
#include "localmds/errors.hpp"
#include "localmds/generators.hpp"

using namespace localmds;
using namespace localmds::oracle;

TEST_CASE("is_dominating basics") {
  Graph c6 = gen::cycle(6).graph;
  VertexSet all(c6.vertices().begin(), c6.vertices().end());
  CHECK(is_dominating(c6, all));
  CHECK(is_dominating(c6, {0, 3}));
  CHECK(!is_dominating(c6, {0}));
  CHECK(is_dominating(gen::star(5).graph, {0}));
  CHECK_THROWS_AS(is_dominating(c6, {99}), std::invalid_argument);
}

TEST_CASE("exact_mds examples") {
  CHECK(exact_mds(gen::star(5).graph) == VertexSet{0});
  CHECK(exact_mds(gen::path(4).graph).size() == 2);
  CHECK(exact_mds(gen::grid(4, 4).graph).size() == 4);
  // gamma(P_n) = ceil(n/3)
  for (std::size_t n = 1; n <= 12; ++n)
    CHECK(exact_mds(gen::path(n).graph).size() == (n + 2) / 3);
}

TEST_CASE("exact_mds matches exhaustive search and is lexicographically least") {
  std::vector<Graph> corpus;
  corpus.push_back(gen::cycle(6).graph);
  corpus.push_back(gen::cycle(9).graph);
  corpus.push_back(gen::grid(3, 4).graph);
  corpus.push_back(gen::torus_grid(3, 4).graph);
  corpus.push_back(gen::star(7).graph);
  corpus.push_back(gen::random_tree(11, 4).graph);
  corpus.push_back(gen::random_planar(10, 9).graph);
  corpus.push_back(gen::complete_bipartite(3, 7).graph);
  for (const Graph& g : corpus) {
    VertexSet got = exact_mds(g);
    VertexSet want = th::exhaustive_mds(g);
    CHECK(got == want);
    CHECK(is_dominating(g, got));
  }
}

TEST_CASE("exact_mds refuses above the cap") {
  CHECK_THROWS_AS(exact_mds(gen::grid(6, 6).graph, 25), CapExceeded);
}

TEST_CASE("ratio") {
  Graph c6 = gen::cycle(6).graph;
  CHECK(ratio(c6, exact_mds(c6)) == Rat(1));
  CHECK(ratio(c6, {0, 1, 3, 4}) == Rat(2));
  CHECK(ratio(gen::star(7).graph, {0, 1}) == Rat(2));
  CHECK_THROWS_AS(ratio(c6, {0}), std::invalid_argument);
}

TEST_CASE("greedy baseline dominates") {
  for (std::uint64_t s : {1, 2, 3}) {
    Graph g = gen::random_planar(40, s).graph;
    CHECK(is_dominating(g, greedy_mds(g)));
  }
}
