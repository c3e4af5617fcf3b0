#pragma once

#include <map>
#include <optional>
#include <string>

#include "localmds/exec.hpp"
#include "localmds/graph.hpp"

namespace localmds {
namespace minor {

/// Witness that K_{3,t} is a depth-1 minor of G: branch sets are pairwise
/// disjoint radius-<=1 stars, labeled L1..L3 and R1..Rt, with a G-edge
/// between every L-set and every R-set.
struct MinorModel {
  std::map<std::string, VertexSet> branch_sets;
  int t = 3;
};

/// Independent validity check for a claimed model (disjointness, star shape
/// of every branch set, presence of all 3*t cross edges).
bool validate_model(const Graph& g, const MinorModel& model);

/// Exhaustive backtracking search for a K_{3,t} depth-1 minor model.
/// Deterministic; refuses graphs with more than `cap` vertices.
std::optional<MinorModel> find_k3t_depth1_minor(const Graph& g, int t,
                                                std::size_t cap = 40);

/// The v-canonical subgraph: the lexicographically smallest minimal
/// subgraph K of G[N^6[v]] that contains v and has K_{3,3} as a depth-1
/// minor, or absent when none exists. Subgraphs compare by sorted vertex
/// sequence, then sorted edge list; minimal means every single-vertex and
/// single-edge deletion destroys containment. The result, when present,
/// has at most 24 vertices and lies within distance 6 of v.
/// Refuses when |N^6[v]| exceeds ball_cap.
std::optional<Graph> canonical_k33_subgraph(const Graph& g, VertexId v,
                                            std::size_t ball_cap = 60,
                                            Exec exec = Exec::Parallel);

/// All canonical subgraphs of a graph at once (one shared enumeration);
/// semantically identical to calling canonical_k33_subgraph per vertex.
/// Requires vertex_count() <= ball_cap.
std::map<VertexId, Graph> canonical_k33_all(const Graph& g,
                                            std::size_t ball_cap = 60,
                                            Exec exec = Exec::Parallel);

/// g(K_{m,n}) = ceil((m-2)(n-2)/4), or ceil((m-2)(n-2)/2) non-orientable.
int genus_complete_bipartite(int m, int n, bool orientable);

/// The t with K_{3,t} excluded as a minor for genus-g graphs:
/// 4g+3 (orientable) or 2g+3 (non-orientable).
int excluded_k3t_for_genus(int genus, bool orientable);

}  // namespace minor
}  // namespace localmds
