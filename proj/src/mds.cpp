#include "localmds/mds.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "localmds/minor.hpp"

namespace localmds {
namespace mds {

namespace {

bool cover_rec(const Graph& g, VertexId v, const VertexSet& uncovered, int budget) {
  if (uncovered.empty()) return true;
  if (budget == 0) return false;
  VertexId u = *uncovered.begin();
  // Any valid cover contains some w in N[u] \ {v}; branch over them.
  std::vector<VertexId> candidates{u};
  for (VertexId w : g.neighbors(u)) candidates.push_back(w);
  for (VertexId w : candidates) {
    if (w == v) continue;
    VertexSet rest = uncovered;
    rest.erase(w);
    for (VertexId x : g.neighbors(w)) rest.erase(x);
    if (cover_rec(g, v, rest, budget - 1)) return true;
  }
  return false;
}

}  // namespace

bool coverable(const Graph& g, VertexId v, int k) {
  if (k < 0) throw std::invalid_argument("coverable: k must be >= 0");
  auto nb = g.neighbors(v);  // throws on unknown vertex
  VertexSet uncovered(nb.begin(), nb.end());
  return cover_rec(g, v, uncovered, k);
}

VertexSet phase1(const Graph& g, const Rat& c, Exec exec) {
  if (c < Rat(1)) throw std::invalid_argument("phase1: c must be >= 1");
  const int budget = static_cast<int>((c * Rat(2)).floor());
  const std::size_t n = g.vertex_count();
  std::vector<char> in_d(n, 0);
  for_each_index(n, exec, [&](std::size_t i) {
    VertexId v = g.vertices()[i];
    in_d[i] = coverable(g, v, budget) ? 0 : 1;
  });
  VertexSet d;
  for (std::size_t i = 0; i < n; ++i)
    if (in_d[i]) d.insert(g.vertices()[i]);
  return d;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (VertexId v : s) {
    out.insert(v);  // validity of v is checked by neighbors()
    auto nb = g.neighbors(v);
    out.insert(nb.begin(), nb.end());
  }
  return out;
}

VertexSet phase2(const Graph& g, const VertexSet& d, Exec exec) {
  const std::size_t n = g.vertex_count();
  std::vector<char> dominated(n, 0);
  for (VertexId v : d) {
    dominated[g.index_of(v)] = 1;
    for (VertexId w : g.neighbors(v)) dominated[g.index_of(w)] = 1;
  }
  // Residual degree d_{G-D}(w) = |N[w] \ N[D]| depends only on d.
  std::vector<std::size_t> residual(n, 0);
  for_each_index(n, exec, [&](std::size_t i) {
    VertexId w = g.vertices()[i];
    std::size_t r = dominated[i] ? 0 : 1;
    for (VertexId x : g.neighbors(w))
      if (!dominated[g.index_of(x)]) ++r;
    residual[i] = r;
  });

  std::vector<VertexId> dom(n, 0);
  std::vector<char> undominated(n, 0);
  for_each_index(n, exec, [&](std::size_t i) {
    if (dominated[i]) return;
    undominated[i] = 1;
    VertexId v = g.vertices()[i];
    VertexId best = v;
    std::size_t best_res = residual[i];
    for (VertexId w : g.neighbors(v)) {
      std::size_t r = residual[g.index_of(w)];
      if (r > best_res || (r == best_res && w < best)) {
        best = w;
        best_res = r;
      }
    }
    dom[i] = best;
  });

  VertexSet image;
  for (std::size_t i = 0; i < n; ++i)
    if (undominated[i]) image.insert(dom[i]);
  return image;
}

MdsResult modified_lenzen(const Graph& g, const Rat& c, Exec exec) {
  MdsResult r;
  r.phase1_set = phase1(g, c, exec);
  r.phase2_set = phase2(g, r.phase1_set, exec);
  r.dominating_set = r.phase1_set;
  r.dominating_set.insert(r.phase2_set.begin(), r.phase2_set.end());
  r.rounds_used = 0;
  r.locality_radius = 5;
  return r;
}

int genus_density_c(int genus) {
  if (genus < 0) throw std::invalid_argument("genus_density_c: genus >= 0");
  if (genus == 0) return 3;
  int k = 0;  // ceil(sqrt(25 * genus)) keeps the cover budget integral
  while (k * k < 25 * genus) ++k;
  return k;
}

MdsResult genus_algorithm(const Graph& g, int genus, std::size_t ball_cap,
                          Exec exec) {
  if (genus < 0) throw std::invalid_argument("genus_algorithm: genus >= 0");
  const int c = genus_density_c(genus);

  MdsResult r;
  r.phase1_set = phase1(g, Rat(c), exec);
  r.locality_radius = genus == 0 ? 5 : 24 * genus + 8;

  VertexSet d = r.phase1_set;
  if (genus >= 1) {
    Graph work = g.without(d);
    // Canonical subgraphs are computed once, in G - D, before the loop.
    std::map<VertexId, VertexSet> alive;
    if (work.vertex_count() <= ball_cap) {
      for (auto& [v, k] : minor::canonical_k33_all(work, ball_cap, exec)) {
        const auto& vs = k.vertices();
        alive.emplace(v, VertexSet(vs.begin(), vs.end()));
      }
    } else {
      for (VertexId v : work.vertices()) {
        auto k = minor::canonical_k33_subgraph(work, v, ball_cap, exec);
        if (k) {
          const auto& vs = k->vertices();
          alive.emplace(v, VertexSet(vs.begin(), vs.end()));
        }
      }
    }

    for (int iter = 0; iter < genus && !alive.empty(); ++iter) {
      std::vector<VertexId> chosen;
      for (const auto& [v, kv] : alive) {
        bool ok = true;
        for (VertexId u : ball(work, v, 12)) {
          if (u >= v) continue;  // open neighborhood, smaller ids veto
          auto it = alive.find(u);
          if (it == alive.end()) continue;
          const VertexSet& ku = it->second;
          bool intersects = std::any_of(ku.begin(), ku.end(), [&](VertexId x) {
            return kv.count(x) > 0;
          });
          if (intersects) {
            ok = false;
            break;
          }
        }
        if (ok) chosen.push_back(v);
      }
      VertexSet newly;
      for (VertexId v : chosen) {
        const VertexSet& kv = alive.at(v);
        newly.insert(kv.begin(), kv.end());
      }
      if (newly.empty()) break;
      r.preprocessing_set.insert(newly.begin(), newly.end());
      d.insert(newly.begin(), newly.end());
      // Absorbed or stale candidates drop out of later iterations.
      for (auto it = alive.begin(); it != alive.end();) {
        bool stale = std::any_of(it->second.begin(), it->second.end(),
                                 [&](VertexId x) { return newly.count(x) > 0; });
        it = stale ? alive.erase(it) : ++it;
      }
    }
  }

  r.phase2_set = phase2(g, d, exec);
  r.dominating_set = d;
  r.dominating_set.insert(r.phase2_set.begin(), r.phase2_set.end());
  return r;
}

}  // namespace mds
}  // namespace localmds
