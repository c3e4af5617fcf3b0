#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "localmds/rational.hpp"

namespace localmds {

using VertexId = std::uint32_t;
using VertexSet = std::set<VertexId>;

/// Undirected edge, stored normalized with u < v.
struct Edge {
  VertexId u;
  VertexId v;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph with stable integer vertex ids and
/// optional positive rational vertex/edge weights.
///
/// Immutable after construction; contractions, induced subgraphs and the
/// like build new graphs. Unweighted vertices/edges report weight 1.
/// Vertex ids are totally ordered and serve as the deterministic tie-break
/// everywhere in the library.
class Graph {
public:
  Graph() = default;
  Graph(std::vector<VertexId> vertices,
        const std::vector<std::pair<VertexId, VertexId>>& edges);

  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<VertexId>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId a, VertexId b) const;

  /// Neighbors of v sorted by id. Throws on unknown vertex.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  /// Dense index of v in [0, vertex_count()). Stable for a given graph.
  std::size_t index_of(VertexId v) const;

  bool has_vertex_weights() const { return !vweight_.empty(); }
  bool has_edge_weights() const { return !eweight_.empty(); }
  Rat vertex_weight(VertexId v) const;
  Rat edge_weight(VertexId a, VertexId b) const;
  Rat total_edge_weight() const;
  Rat total_vertex_weight() const;

  void set_vertex_weight(VertexId v, const Rat& w);
  void set_edge_weight(VertexId a, VertexId b, const Rat& w);

  Graph induced(const VertexSet& keep) const;
  Graph without(const VertexSet& drop) const;

  /// Equality of vertex set, edge set and weight functions.
  friend bool operator==(const Graph& a, const Graph& b);

private:
  void check_vertex(VertexId v, const char* who) const;

  std::vector<VertexId> verts_;             // sorted ascending
  std::vector<std::vector<VertexId>> adj_;  // by index, sorted
  std::vector<Edge> edges_;                 // sorted
  std::map<VertexId, Rat> vweight_;
  std::map<Edge, Rat> eweight_;
};

/// N^r[v]: the closed r-neighborhood of v; N^0[v] = {v}.
VertexSet ball(const Graph& g, VertexId v, unsigned r);

/// A partition of V(G) into radius-<=1 stars together with the contracted
/// quotient graph carrying inherited weights.
struct Star {
  VertexId center;
  VertexSet leaves;
};

struct StarPartition {
  std::vector<Star> stars;
  Graph quotient;                        // vertex i <-> stars[i]
  std::map<VertexId, std::size_t> star_of;  // original vertex -> star index
};

/// Contracts the given stars. Stars must be vertex-disjoint, cover V(g),
/// and each leaf must be adjacent to its center; violations throw an error
/// naming the offending star. Quotient vertex i carries the sum of member
/// vertex weights; a quotient edge carries the sum of crossing edge weights.
StarPartition contract_stars(const Graph& g, const std::vector<Star>& stars);

/// |E|/|V| as an exact rational. Throws on the empty graph.
Rat edge_density(const Graph& g);

struct DensityBound {
  Rat value;
  bool exact;  // false: peeling-order degeneracy, an upper bound within factor 2
};

/// max_{H subgraph of g} |E(H)|/|V(H)|. Exact via Goldberg's maximum-density
/// subgraph flow construction for vertex_count() <= cap; above the cap falls
/// back to the peeling-order degeneracy and flags the result as a bound.
DensityBound degeneracy_bound(const Graph& g, std::size_t cap = 64);

/// Partition of V(G) into connected clusters of bounded radius.
struct ClusterPartition {
  std::vector<VertexSet> clusters;
  std::int64_t radius_bound = 0;  // saturating; actual radii are checked by BFS
};

}  // namespace localmds
