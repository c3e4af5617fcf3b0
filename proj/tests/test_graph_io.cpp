#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "localmds/generators.hpp"
#include "localmds/graph_io.hpp"

using namespace localmds;

TEST_CASE("write/read round trip reproduces the identical graph") {
  auto gen = gen::torus_grid(3, 4);
  gen::seed_edge_weights(gen.graph, 5);
  gen::seed_vertex_weights(gen.graph, 6);
  std::ostringstream out;
  write_graph(out, gen.graph, gen.info.to_metadata());
  std::istringstream in(out.str());
  GraphFile gf = read_graph(in);
  CHECK(gf.graph == gen.graph);
  CHECK(gf.metadata.at("genus_upper") == "1");

  // Bit-exact: writing again yields the same bytes.
  std::ostringstream out2;
  write_graph(out2, gf.graph, gf.metadata);
  CHECK(out.str() == out2.str());
}

TEST_CASE("format errors carry line information") {
  std::istringstream missing("e 0 1\n");
  CHECK_THROWS_WITH_AS(read_graph(missing), doctest::Contains("header"),
                       std::invalid_argument);
  std::istringstream bad("p 2 1\nq 0 1\n");
  CHECK_THROWS_WITH_AS(read_graph(bad), doctest::Contains("line 2"),
                       std::invalid_argument);
  std::istringstream count("p 2 2\ne 0 1\n");
  CHECK_THROWS_AS(read_graph(count), std::invalid_argument);
}

TEST_CASE("unweighted entries default to weight 1") {
  std::istringstream in("p 3 2\ne 0 1\ne 1 2\new 0 1 3/2\n");
  GraphFile gf = read_graph(in);
  CHECK(gf.graph.edge_weight(0, 1) == Rat(3, 2));
  CHECK(gf.graph.edge_weight(1, 2) == Rat(1));
}

TEST_CASE("writer refuses non-dense ids") {
  Graph g({5, 7}, {{5, 7}});
  std::ostringstream out;
  CHECK_THROWS_AS(write_graph(out, g), std::invalid_argument);
}
