#pragma once

#include <cstddef>
#include <optional>

#include "localmds/graph.hpp"

namespace localmds {
namespace oracle {

/// True iff N[s] = V(g). Throws if s contains a non-vertex.
bool is_dominating(const Graph& g, const VertexSet& s);

/// Default exact-solver cap: LOCALMDS_ORACLE_CAP from the environment when
/// set, otherwise 25.
std::size_t default_cap();

/// Exact minimum dominating set by branch and bound on the least-covered
/// undominated vertex, branching over its closed neighborhood, with a greedy
/// upper bound and the lower bound ceil(uncovered/(maxdeg+1)). Ties among
/// minimum-size solutions break toward the lexicographically smallest sorted
/// id sequence. Refuses graphs above the cap.
VertexSet exact_mds(const Graph& g, std::optional<std::size_t> cap = std::nullopt);

/// gamma(g) = |exact_mds(g)|.
std::size_t gamma(const Graph& g, std::optional<std::size_t> cap = std::nullopt);

/// |s| / gamma(g) as an exact rational. s must dominate g.
Rat ratio(const Graph& g, const VertexSet& s,
          std::optional<std::size_t> cap = std::nullopt);

/// Classic set-cover greedy: repeatedly take the vertex covering the most
/// still-undominated vertices (ties to the smallest id).
VertexSet greedy_mds(const Graph& g);

}  // namespace oracle
}  // namespace localmds
