#pragma once

#include <algorithm>
#include <vector>

#include "localmds/graph.hpp"
#include "localmds/oracle.hpp"

namespace th {

using localmds::Edge;
using localmds::Graph;
using localmds::Rat;
using localmds::VertexId;
using localmds::VertexSet;

inline Graph make(std::size_t n,
                  std::vector<std::pair<VertexId, VertexId>> edges) {
  std::vector<VertexId> vs(n);
  for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<VertexId>(i);
  return Graph(vs, edges);
}

// Independent BFS oracle for N^r[v].
inline VertexSet ball_oracle(const Graph& g, VertexId v, unsigned r) {
  VertexSet cur{v};
  for (unsigned i = 0; i < r; ++i) {
    VertexSet next = cur;
    for (VertexId u : cur)
      for (VertexId w : g.neighbors(u)) next.insert(w);
    cur = next;
  }
  return cur;
}

// Exhaustive max subgraph density over all non-empty vertex subsets.
inline Rat density_oracle(const Graph& g) {
  std::size_t n = g.vertex_count();
  Rat best(0);
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.insert(g.vertices()[i]);
    Graph h = g.induced(s);
    Rat d(static_cast<std::int64_t>(h.edge_count()),
          static_cast<std::int64_t>(h.vertex_count()));
    if (d > best) best = d;
  }
  return best;
}

// Exhaustive minimum dominating set: smallest size, lexicographically
// smallest among those.
inline VertexSet exhaustive_mds(const Graph& g) {
  std::size_t n = g.vertex_count();
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
    // Iterate subsets of the given size in lexicographic order of their
    // sorted id sequences.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      VertexSet s;
      for (std::size_t i : idx) s.insert(g.vertices()[i]);
      if (localmds::oracle::is_dominating(g, s)) return s;
      // next combination
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == n - size + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
      if (size == 0) break;
    }
    if (size == 0 && localmds::oracle::is_dominating(g, {})) return {};
  }
  return {};
}

// BFS eccentricity-based radius of the induced subgraph on a cluster.
inline long cluster_radius(const Graph& g, const VertexSet& cluster) {
  Graph h = g.induced(cluster);
  long best = -1;
  for (VertexId c : cluster) {
    std::map<VertexId, long> dist{{c, 0}};
    std::vector<VertexId> frontier{c};
    long ecc = 0;
    while (!frontier.empty()) {
      std::vector<VertexId> next;
      for (VertexId u : frontier)
        for (VertexId w : h.neighbors(u))
          if (!dist.count(w)) {
            dist[w] = dist[u] + 1;
            ecc = std::max(ecc, dist[w]);
            next.push_back(w);
          }
      frontier = std::move(next);
    }
    if (dist.size() != cluster.size()) continue;  // c does not reach everyone
    if (best < 0 || ecc < best) best = ecc;
  }
  return best;  // -1 when the cluster is disconnected
}

}  // namespace th
