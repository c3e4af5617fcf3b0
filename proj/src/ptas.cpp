#include "localmds/ptas.hpp"

#include <algorithm>
#include <stdexcept>

#include "localmds/errors.hpp"
#include "localmds/oracle.hpp"

namespace localmds {
namespace ptas {

RefineReport refine_report(const Graph& g, const VertexSet& d,
                           const Rat& epsilon, const Rat& c,
                           const Rat& nabla1_bound,
                           const clustering::ExpansionBound& expansion_bound,
                           const RefineOptions& opts) {
  if (!(epsilon > Rat(0)))
    throw std::invalid_argument("refine: epsilon must be positive");
  if (c < Rat(1)) throw std::invalid_argument("refine: c must be >= 1");
  if (nabla1_bound < Rat(1))
    throw std::invalid_argument("refine: nabla1_bound must be >= 1");
  RefineReport rep;
  if (g.vertex_count() == 0) return rep;
  if (!oracle::is_dominating(g, d))
    throw std::invalid_argument("refine: d does not dominate the graph");

  // Radius-1 parts: every vertex joins its smallest-id dominator.
  std::vector<VertexId> dominators(d.begin(), d.end());  // sorted
  std::map<VertexId, std::size_t> part_index;
  for (std::size_t i = 0; i < dominators.size(); ++i)
    part_index[dominators[i]] = i;
  std::vector<std::size_t> part_of(g.vertex_count());
  for (VertexId v : g.vertices()) {
    if (d.count(v)) {
      part_of[g.index_of(v)] = part_index.at(v);
      continue;
    }
    VertexId owner = 0;
    bool found = false;
    for (VertexId u : g.neighbors(v))
      if (d.count(u)) {
        owner = u;  // neighbors are sorted, the first hit is the smallest
        found = true;
        break;
      }
    if (!found) throw std::logic_error("refine: undominated vertex");
    part_of[g.index_of(v)] = part_index.at(owner);
  }

  // Contract the parts; H carries unit edge weights.
  std::vector<VertexId> hverts(dominators.size());
  for (std::size_t i = 0; i < hverts.size(); ++i)
    hverts[i] = static_cast<VertexId>(i);
  std::set<std::pair<VertexId, VertexId>> hedges;
  for (const Edge& e : g.edges()) {
    std::size_t a = part_of[g.index_of(e.u)], b = part_of[g.index_of(e.v)];
    if (a != b)
      hedges.emplace(static_cast<VertexId>(std::min(a, b)),
                     static_cast<VertexId>(std::max(a, b)));
  }
  Graph h(hverts, {hedges.begin(), hedges.end()});
  if (h.vertex_count() > 0 && edge_density(h) > nabla1_bound)
    rep.density_warning = true;

  const Rat delta = epsilon / (Rat(2) * c * nabla1_bound);
  ClusterPartition cp = clustering::cluster(h, delta, expansion_bound);

  // Uncontract and solve each cluster exactly.
  const std::size_t cap = opts.exact_cap.value_or(oracle::default_cap());
  std::vector<VertexSet> regions;
  for (const VertexSet& hc : cp.clusters) {
    VertexSet region;
    for (VertexId hv : hc) {
      std::size_t part = hv;
      for (VertexId v : g.vertices())
        if (part_of[g.index_of(v)] == part) region.insert(v);
    }
    regions.push_back(std::move(region));
  }
  rep.cluster_count = regions.size();
  for (std::size_t i = 0; i < regions.size(); ++i) {
    rep.largest_cluster = std::max(rep.largest_cluster, regions[i].size());
    if (regions[i].size() > cap)
      throw CapExceeded("refine: cluster " + std::to_string(i) + " has " +
                        std::to_string(regions[i].size()) +
                        " vertices, above the exact-solve cap " +
                        std::to_string(cap) + "; use a larger epsilon");
  }

  std::vector<VertexSet> solutions(regions.size());
  for_each_index(regions.size(), opts.exec, [&](std::size_t i) {
    solutions[i] = oracle::exact_mds(g.induced(regions[i]), cap);
  });
  for (const VertexSet& s : solutions)
    rep.refined.insert(s.begin(), s.end());
  return rep;
}

VertexSet refine(const Graph& g, const VertexSet& d, const Rat& epsilon,
                 const Rat& c, const Rat& nabla1_bound,
                 const clustering::ExpansionBound& expansion_bound,
                 const RefineOptions& opts) {
  return refine_report(g, d, epsilon, c, nabla1_bound, expansion_bound, opts)
      .refined;
}

}  // namespace ptas
}  // namespace localmds
