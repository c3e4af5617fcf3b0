#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "localmds/graph.hpp"
#include "localmds/local_sim.hpp"

namespace localmds {
namespace clustering {

/// Out-degree <= 1 orientation: every vertex selects one incident edge of
/// maximum weight (ties to the smallest neighbor id); an edge selected by
/// both endpoints is kept once, directed from the smaller id to the larger.
/// The retained weight is at least omega(G)/(2a) for any arboricity bound a.
/// The tie-breaks make the arc structure acyclic, i.e. a rooted forest.
struct PseudoForest {
  std::map<VertexId, std::optional<VertexId>> arcs;
  Rat weight_retained;
  std::vector<Edge> arc_edges() const;
};

PseudoForest pseudo_forest(const Graph& g);

/// Star partition whose quotient keeps at most (1 - 1/(8a)) of the total
/// edge weight: the pseudo-forest is 2-colored per component and the
/// heavier of the two tail-color star families is contracted, capturing at
/// least half the forest weight. Errors when a < 1.
StarPartition heavy_star_partition(const Graph& g, const Rat& a);

using ExpansionBound = std::function<Rat(std::int64_t radius)>;

ExpansionBound expansion_planar();           // constant 3
ExpansionBound expansion_genus(int genus);   // 3 for genus 0, else ceil(5*sqrt(g))
ExpansionBound expansion_const(const Rat& c);

/// Least i >= 1 with (1 - 1/(8*gfun(i)))^i <= epsilon, where
/// gfun(i) = 2*expansion_bound((3^i-1)/2). Errors beyond 10^6 iterations.
int clustering_iterations(const Rat& epsilon, const ExpansionBound& f);

/// Iterated heavy-star contraction: i0 rounds of contraction, composed back
/// onto the original vertex set. Every cluster is connected with radius at
/// most (3^i0 - 1)/2 and the crossing weight is at most epsilon * omega(G).
ClusterPartition cluster(const Graph& g, const Rat& epsilon,
                         const ExpansionBound& expansion_bound);

/// --- distributed variant ------------------------------------------------

struct HeavyStarMsg {
  VertexId pick = 0;
  int color = -1;
  int type = -1;  // 0 = center-type, 1 = leaf-want
  bool promoted = false;
};

struct HeavyStarState {
  VertexId self = 0;
  std::optional<VertexId> parent;
  std::vector<VertexId> children;
  std::map<VertexId, int> nbr_color;
  int color = 0;
  int prev_color = 0;
  int type = 0;
  bool promoted = false;
  std::map<VertexId, int> nbr_type;
  std::map<VertexId, bool> nbr_promoted;
  VertexId center = 0;
};

using HeavyStarProgram = sim::NodeProgram<HeavyStarState, HeavyStarMsg, VertexId>;

/// O(log* n)-round star formation: pseudo-forest arcs, Cole-Vishkin color
/// reduction to 6 colors, shift-down to 3, then a constant-round local
/// bonding rule. Output is the id of the star center adopted by each node.
/// n_hint bounds the id space and fixes the shared round schedule.
HeavyStarProgram heavy_star_program(std::size_t n_hint);

/// Runs the program and assembles the resulting star partition.
struct SimulatedStars {
  StarPartition partition;
  int rounds_used = 0;
};
SimulatedStars simulate_heavy_star(const Graph& g, Exec exec = Exec::Parallel);

}  // namespace clustering
}  // namespace localmds
