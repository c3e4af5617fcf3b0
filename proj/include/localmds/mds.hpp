#pragma once

#include <optional>

#include "localmds/exec.hpp"
#include "localmds/graph.hpp"
#include "localmds/rational.hpp"

namespace localmds {
namespace mds {

struct MdsResult {
  VertexSet dominating_set;    // union of the three parts
  VertexSet phase1_set;        // D
  VertexSet preprocessing_set; // vertices of absorbed canonical subgraphs
  VertexSet phase2_set;        // D'
  int rounds_used = 0;         // 0 when computed directly
  int locality_radius = 0;
};

/// True iff some A subseteq V(g)\{v} with |A| <= k covers N(v), i.e.
/// N(v) subseteq N[A]. Decided exactly by depth-<=k branching: pick the
/// smallest uncovered u in N(v) and try every w in N[u]\{v}; any cover
/// must contain such a w. All candidates lie in N^2[v].
bool coverable(const Graph& g, VertexId v, int k);

/// Phase 1: { v : not coverable(g, v, floor(2c)) }.
VertexSet phase1(const Graph& g, const Rat& c, Exec exec = Exec::Parallel);

/// Phase 2: every vertex not dominated by d elects the member of its closed
/// neighborhood with maximum residual degree |N[w] \ N[d]| (ties to the
/// smallest id); returns the image of the election.
VertexSet phase2(const Graph& g, const VertexSet& d, Exec exec = Exec::Parallel);

/// N[s] as a set.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// The two-phase algorithm with cover budget 2c. c is the edge density
/// bound for depth-1 minors of the input class (3 for planar inputs).
MdsResult modified_lenzen(const Graph& g, const Rat& c, Exec exec = Exec::Parallel);

/// Density parameter for genus-g inputs: 3 for g = 0, else ceil(5*sqrt(g)).
int genus_density_c(int genus);

/// Phase 1 with 2c = 10*sqrt(genus), then `genus` preprocessing iterations
/// that absorb disjoint canonical K_{3,3} subgraphs of G - D (each vertex's
/// choice is vetoed by any smaller-id vertex within open distance 12 whose
/// canonical subgraph intersects its own), then Phase 2.
MdsResult genus_algorithm(const Graph& g, int genus,
                          std::size_t ball_cap = 60, Exec exec = Exec::Parallel);

}  // namespace mds
}  // namespace localmds
