#pragma once

#include "localmds/local_sim.hpp"
#include "localmds/mds.hpp"

namespace localmds {
namespace mds {

/// Per-node output of the distributed variants.
struct NodeOut {
  bool in_d = false;
  bool in_pre = false;
  bool in_dprime = false;
  friend bool operator==(const NodeOut&, const NodeOut&) = default;
};

struct LenzenMsg {
  sim::GatherMsg known;    // adjacency flood, rounds 0..4
  bool election = false;   // round 5: "I elect you as my dominator"
};

struct LenzenState {
  VertexId self = 0;
  std::map<VertexId, std::vector<VertexId>> known;
  NodeOut out;
  bool self_elected = false;
};

using LenzenProgram = sim::NodeProgram<LenzenState, LenzenMsg, NodeOut>;

/// Distributed modified Lenzen: 5 rounds of adjacency flooding (the fixed
/// gather radius), one local decision, one election round; 6 rounds total
/// on every graph.
LenzenProgram modified_lenzen_program(const Rat& c);

struct GenusState {
  VertexId self = 0;
  std::map<VertexId, std::vector<VertexId>> known;
  NodeOut out;
};

using GenusProgram = sim::NodeProgram<GenusState, sim::GatherMsg, NodeOut>;

/// Distributed genus algorithm: gathers a radius-(24*genus+8) view and
/// replays the direct algorithm on it, keeping only its own membership.
GenusProgram genus_program(int genus, std::size_t ball_cap = 60);

MdsResult result_from_node_outputs(const std::map<VertexId, NodeOut>& outs);

/// Run the programs on the round engine and assemble an MdsResult whose
/// rounds_used is the engine's round count.
MdsResult simulate_modified_lenzen(const Graph& g, const Rat& c,
                                   Exec exec = Exec::Parallel);
MdsResult simulate_genus(const Graph& g, int genus, std::size_t ball_cap = 60,
                         Exec exec = Exec::Parallel);

}  // namespace mds
}  // namespace localmds
