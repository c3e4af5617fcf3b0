#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "localmds/graph.hpp"

namespace localmds {
namespace gen {

/// Class membership a generator can vouch for by construction. Never
/// computed from the graph; acceptance tests assert class-conditional
/// bounds against these tags.
struct ClassInfo {
  bool planar = false;
  int genus_upper = 0;           // orientable
  Rat arboricity_upper{1};
  Rat density_c{1};              // depth-1 minor edge density bound
  int k3t_exclusion_t = 3;       // excludes K_{3,t} as depth-1 minor

  std::map<std::string, std::string> to_metadata() const;
  static ClassInfo from_metadata(const std::map<std::string, std::string>& md);
};

struct Generated {
  Graph graph;
  ClassInfo info;
};

Generated path(std::size_t n);
Generated cycle(std::size_t n);
Generated star(std::size_t leaves);
Generated random_tree(std::size_t n, std::uint64_t seed);
Generated grid(std::size_t w, std::size_t h);
Generated torus_grid(std::size_t w, std::size_t h);  // w, h >= 3; genus <= 1
Generated complete_bipartite(std::size_t m, std::size_t n);
/// Each K_n edge replaced by a path with s internal vertices.
Generated subdivided_clique(std::size_t n, std::size_t s = 3);
/// Seeded random maximal planar graph by repeated triangle splitting;
/// sparsify_num/sparsify_den of the edges are then deleted (0 keeps all).
Generated random_planar(std::size_t n, std::uint64_t seed,
                        const Rat& sparsify = Rat(0));

/// Deterministic seeded edge weights (and optionally vertex weights):
/// small-denominator rationals in [1, 3].
void seed_edge_weights(Graph& g, std::uint64_t seed);
void seed_vertex_weights(Graph& g, std::uint64_t seed);

}  // namespace gen
}  // namespace localmds
