#include "localmds/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "localmds/errors.hpp"

namespace localmds {
namespace clustering {

std::vector<Edge> PseudoForest::arc_edges() const {
  std::vector<Edge> out;
  for (const auto& [v, w] : arcs)
    if (w) out.emplace_back(v, *w);
  std::sort(out.begin(), out.end());
  return out;
}

PseudoForest pseudo_forest(const Graph& g) {
  PseudoForest f;
  f.weight_retained = Rat(0);
  std::map<VertexId, VertexId> choice;
  for (VertexId v : g.vertices()) {
    f.arcs[v] = std::nullopt;
    std::optional<VertexId> best;
    Rat best_w(0);
    for (VertexId w : g.neighbors(v)) {
      Rat wt = g.edge_weight(v, w);
      if (!best || wt > best_w) {
        best = w;
        best_w = wt;
      }
    }
    if (best) choice[v] = *best;
  }
  for (const auto& [v, w] : choice) {
    auto back = choice.find(w);
    bool mutual = back != choice.end() && back->second == v;
    if (mutual && v > w) continue;  // kept once, directed small -> large
    f.arcs[v] = w;
    f.weight_retained += g.edge_weight(v, w);
  }
  return f;
}

namespace {

// Proper 2-coloring of the pseudo-forest's underlying forest, by BFS from
// the smallest vertex of each component.
std::map<VertexId, int> two_color(const Graph& g, const PseudoForest& f) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (VertexId v : g.vertices()) adj[v];
  for (const Edge& e : f.arc_edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::map<VertexId, int> color;
  for (const auto& [root, _] : adj) {
    if (color.count(root)) continue;
    color[root] = 0;
    std::deque<VertexId> q{root};
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop_front();
      for (VertexId w : adj[u])
        if (!color.count(w)) {
          color[w] = 1 - color[u];
          q.push_back(w);
        }
    }
  }
  return color;
}

}  // namespace

StarPartition heavy_star_partition(const Graph& g, const Rat& a) {
  if (a < Rat(1))
    throw std::invalid_argument("heavy_star_partition: arboricity bound a >= 1");

  PseudoForest f = pseudo_forest(g);
  std::map<VertexId, int> color = two_color(g, f);

  // Tails of one color class form vertex-disjoint stars around their arc
  // heads; the heavier class captures at least half the forest weight.
  Rat captured[2] = {Rat(0), Rat(0)};
  for (const auto& [v, w] : f.arcs)
    if (w) captured[color.at(v)] += g.edge_weight(v, *w);
  int pick = captured[1] > captured[0] ? 1 : 0;

  std::map<VertexId, VertexSet> leaves;  // head -> adopted tails
  std::set<VertexId> placed;
  for (const auto& [v, w] : f.arcs)
    if (w && color.at(v) == pick) {
      leaves[*w].insert(v);
      placed.insert(v);
      placed.insert(*w);
    }
  std::vector<Star> stars;
  for (const auto& [center, ls] : leaves) stars.push_back({center, ls});
  for (VertexId v : g.vertices())
    if (!placed.count(v)) stars.push_back({v, {}});
  std::sort(stars.begin(), stars.end(),
            [](const Star& x, const Star& y) { return x.center < y.center; });

  StarPartition part = contract_stars(g, stars);
  Rat bound = (Rat(1) - Rat(1) / (Rat(8) * a)) * g.total_edge_weight();
  if (part.quotient.total_edge_weight() > bound)
    throw std::logic_error("heavy_star_partition: weight contract violated");
  return part;
}

ExpansionBound expansion_planar() {
  return [](std::int64_t) { return Rat(3); };
}

ExpansionBound expansion_genus(int genus) {
  if (genus < 0) throw std::invalid_argument("expansion_genus: genus >= 0");
  int k = 0;
  while (k * k < 25 * genus) ++k;
  Rat c = genus == 0 ? Rat(3) : Rat(k);
  return [c](std::int64_t) { return c; };
}

ExpansionBound expansion_const(const Rat& c) {
  if (c < Rat(1)) throw std::invalid_argument("expansion_const: c >= 1");
  return [c](std::int64_t) { return c; };
}

namespace {

std::int64_t pow3_saturating(int i) {
  std::int64_t r = 1;
  for (int k = 0; k < i; ++k) {
    if (r > INT64_MAX / 3) return INT64_MAX;
    r *= 3;
  }
  return r;
}

std::int64_t radius_bound_for(int i0) {
  std::int64_t p = pow3_saturating(i0);
  return p == INT64_MAX ? INT64_MAX : (p - 1) / 2;
}

}  // namespace

int clustering_iterations(const Rat& epsilon, const ExpansionBound& f) {
  if (!(epsilon > Rat(0)) || !(epsilon < Rat(1)))
    throw std::invalid_argument("clustering_iterations: epsilon in (0,1)");
  const long double log_eps = std::log(static_cast<long double>(
      epsilon.to_double()));
  for (int i = 1; i <= 1'000'000; ++i) {
    Rat gfun = Rat(2) * f(radius_bound_for(i));
    if (gfun < Rat(1))
      throw std::invalid_argument("clustering_iterations: expansion bound < 1");
    long double q = 1.0L - 1.0L / (8.0L * static_cast<long double>(gfun.to_double()));
    if (static_cast<long double>(i) * std::log(q) <= log_eps) return i;
  }
  throw CapExceeded(
      "clustering_iterations: no i0 within 10^6 iterations; expansion bound "
      "grows too fast");
}

ClusterPartition cluster(const Graph& g, const Rat& epsilon,
                         const ExpansionBound& expansion_bound) {
  const int i0 = clustering_iterations(epsilon, expansion_bound);

  Graph cur = g;
  std::vector<VertexSet> parts;
  parts.reserve(g.vertex_count());
  for (VertexId v : g.vertices()) parts.push_back({v});

  for (int i = 1; i <= i0; ++i) {
    if (cur.edge_count() == 0) break;  // all further contractions are identity
    Rat a = Rat(2) * expansion_bound(radius_bound_for(i));
    StarPartition sp = heavy_star_partition(cur, a);
    std::vector<VertexSet> merged(sp.stars.size());
    for (std::size_t s = 0; s < sp.stars.size(); ++s) {
      auto grab = [&](VertexId member) {
        const VertexSet& p = parts[cur.index_of(member)];
        merged[s].insert(p.begin(), p.end());
      };
      grab(sp.stars[s].center);
      for (VertexId leaf : sp.stars[s].leaves) grab(leaf);
    }
    parts = std::move(merged);
    cur = sp.quotient;
  }

  ClusterPartition out;
  out.radius_bound = radius_bound_for(i0);
  out.clusters = std::move(parts);
  std::sort(out.clusters.begin(), out.clusters.end(),
            [](const VertexSet& x, const VertexSet& y) {
              return *x.begin() < *y.begin();
            });

  if (cur.total_edge_weight() > epsilon * g.total_edge_weight())
    throw std::logic_error("cluster: crossing-weight contract violated");
  return out;
}

}  // namespace clustering
}  // namespace localmds
