#include "localmds/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

namespace localmds {

Graph::Graph(std::vector<VertexId> vertices,
             const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("Graph: duplicate vertex id");
  verts_ = std::move(vertices);
  adj_.assign(verts_.size(), {});

  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b)
      throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(a));
    if (!has_vertex(a) || !has_vertex(b))
      throw std::invalid_argument("Graph: edge endpoint is not a vertex: " +
                                  std::to_string(a) + "-" + std::to_string(b));
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("Graph: parallel edge");
  for (const Edge& e : edges_) {
    adj_[index_of(e.u)].push_back(e.v);
    adj_[index_of(e.v)].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_vertex(VertexId v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

std::size_t Graph::index_of(VertexId v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v)
    throw std::invalid_argument("Graph: unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - verts_.begin());
}

void Graph::check_vertex(VertexId v, const char* who) const {
  if (!has_vertex(v))
    throw std::invalid_argument(std::string(who) + ": unknown vertex " +
                                std::to_string(v));
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (a == b || !has_vertex(a) || !has_vertex(b)) return false;
  const auto& nb = adj_[index_of(a)];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  return adj_[index_of(v)];
}

Rat Graph::vertex_weight(VertexId v) const {
  check_vertex(v, "vertex_weight");
  auto it = vweight_.find(v);
  return it == vweight_.end() ? Rat(1) : it->second;
}

Rat Graph::edge_weight(VertexId a, VertexId b) const {
  if (!has_edge(a, b))
    throw std::invalid_argument("edge_weight: no edge " + std::to_string(a) +
                                "-" + std::to_string(b));
  auto it = eweight_.find(Edge(a, b));
  return it == eweight_.end() ? Rat(1) : it->second;
}

Rat Graph::total_edge_weight() const {
  Rat sum(0);
  for (const Edge& e : edges_) sum += edge_weight(e.u, e.v);
  return sum;
}

Rat Graph::total_vertex_weight() const {
  Rat sum(0);
  for (VertexId v : verts_) sum += vertex_weight(v);
  return sum;
}

void Graph::set_vertex_weight(VertexId v, const Rat& w) {
  check_vertex(v, "set_vertex_weight");
  if (w <= Rat(0))
    throw std::invalid_argument("set_vertex_weight: weight must be positive");
  vweight_[v] = w;
}

void Graph::set_edge_weight(VertexId a, VertexId b, const Rat& w) {
  if (!has_edge(a, b))
    throw std::invalid_argument("set_edge_weight: no edge " + std::to_string(a) +
                                "-" + std::to_string(b));
  if (w <= Rat(0))
    throw std::invalid_argument("set_edge_weight: weight must be positive");
  eweight_[Edge(a, b)] = w;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<VertexId> vs;
  vs.reserve(keep.size());
  for (VertexId v : keep) {
    check_vertex(v, "induced");
    vs.push_back(v);
  }
  std::vector<std::pair<VertexId, VertexId>> es;
  for (const Edge& e : edges_)
    if (keep.count(e.u) && keep.count(e.v)) es.emplace_back(e.u, e.v);
  Graph h(std::move(vs), es);
  for (VertexId v : keep) {
    auto it = vweight_.find(v);
    if (it != vweight_.end()) h.vweight_[v] = it->second;
  }
  for (const Edge& e : h.edges_) {
    auto it = eweight_.find(e);
    if (it != eweight_.end()) h.eweight_[e] = it->second;
  }
  return h;
}

Graph Graph::without(const VertexSet& drop) const {
  VertexSet keep;
  for (VertexId v : verts_)
    if (!drop.count(v)) keep.insert(v);
  return induced(keep);
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.verts_ != b.verts_ || a.edges_ != b.edges_) return false;
  for (VertexId v : a.verts_)
    if (a.vertex_weight(v) != b.vertex_weight(v)) return false;
  for (const Edge& e : a.edges_)
    if (a.edge_weight(e.u, e.v) != b.edge_weight(e.u, e.v)) return false;
  return true;
}

VertexSet ball(const Graph& g, VertexId v, unsigned r) {
  if (!g.has_vertex(v))
    throw std::invalid_argument("ball: unknown vertex " + std::to_string(v));
  VertexSet seen{v};
  std::deque<VertexId> frontier{v};
  for (unsigned depth = 0; depth < r && !frontier.empty(); ++depth) {
    std::deque<VertexId> next;
    for (VertexId u : frontier)
      for (VertexId w : g.neighbors(u))
        if (seen.insert(w).second) next.push_back(w);
    frontier = std::move(next);
  }
  return seen;
}

StarPartition contract_stars(const Graph& g, const std::vector<Star>& stars) {
  auto star_name = [](const Star& s) {
    return "star centered at " + std::to_string(s.center);
  };

  StarPartition part;
  part.stars = stars;
  for (std::size_t i = 0; i < stars.size(); ++i) {
    const Star& s = stars[i];
    if (!g.has_vertex(s.center))
      throw std::invalid_argument("contract_stars: unknown center in " + star_name(s));
    auto claim = [&](VertexId v) {
      if (!part.star_of.emplace(v, i).second)
        throw std::invalid_argument("contract_stars: vertex " + std::to_string(v) +
                                    " overlaps another star in " + star_name(s));
    };
    claim(s.center);
    for (VertexId leaf : s.leaves) {
      if (!g.has_edge(s.center, leaf))
        throw std::invalid_argument("contract_stars: leaf " + std::to_string(leaf) +
                                    " not adjacent to center in " + star_name(s));
      claim(leaf);
    }
  }
  if (part.star_of.size() != g.vertex_count())
    throw std::invalid_argument("contract_stars: stars do not cover V(G)");

  std::vector<VertexId> qverts(stars.size());
  for (std::size_t i = 0; i < stars.size(); ++i) qverts[i] = static_cast<VertexId>(i);

  std::map<Edge, Rat> cross;
  for (const Edge& e : g.edges()) {
    std::size_t a = part.star_of.at(e.u), b = part.star_of.at(e.v);
    if (a == b) continue;
    Edge q(static_cast<VertexId>(a), static_cast<VertexId>(b));
    auto [it, fresh] = cross.emplace(q, g.edge_weight(e.u, e.v));
    if (!fresh) it->second += g.edge_weight(e.u, e.v);
  }
  std::vector<std::pair<VertexId, VertexId>> qedges;
  qedges.reserve(cross.size());
  for (const auto& [e, w] : cross) qedges.emplace_back(e.u, e.v);

  part.quotient = Graph(qverts, qedges);
  for (std::size_t i = 0; i < stars.size(); ++i) {
    Rat w = g.vertex_weight(stars[i].center);
    for (VertexId leaf : stars[i].leaves) w += g.vertex_weight(leaf);
    part.quotient.set_vertex_weight(static_cast<VertexId>(i), w);
  }
  for (const auto& [e, w] : cross) part.quotient.set_edge_weight(e.u, e.v, w);
  return part;
}

Rat edge_density(const Graph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("edge_density: empty graph");
  return Rat(static_cast<std::int64_t>(g.edge_count()),
             static_cast<std::int64_t>(g.vertex_count()));
}

namespace {

// Dinic max-flow on a small dense-ish network; capacities are int64.
class MaxFlow {
public:
  explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

  void add_edge(int a, int b, std::int64_t cap_ab, std::int64_t cap_ba) {
    arcs_.push_back({b, head_[a], cap_ab});
    head_[a] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({a, head_[b], cap_ba});
    head_[b] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t run(int s, int t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (std::int64_t f = dfs(s, t, INT64_MAX)) total += f;
    }
    return total;
  }

  // After run(), vertices reachable from s in the residual graph.
  std::vector<bool> min_cut_side(int s) const {
    std::vector<bool> side(head_.size(), false);
    std::vector<int> stack{s};
    side[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e = head_[u]; e != -1; e = arcs_[e].next)
        if (arcs_[e].cap > 0 && !side[arcs_[e].to]) {
          side[arcs_[e].to] = true;
          stack.push_back(arcs_[e].to);
        }
    }
    return side;
  }

private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e != -1; e = arcs_[e].next)
        if (arcs_[e].cap > 0 && level_[arcs_[e].to] < 0) {
          level_[arcs_[e].to] = level_[u] + 1;
          q.push(arcs_[e].to);
        }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t lim) {
    if (u == t) return lim;
    for (int& e = it_[u]; e != -1; e = arcs_[e].next) {
      Arc& a = arcs_[e];
      if (a.cap > 0 && level_[a.to] == level_[u] + 1) {
        std::int64_t f = dfs(a.to, t, std::min(lim, a.cap));
        if (f > 0) {
          a.cap -= f;
          arcs_[e ^ 1].cap += f;
          return f;
        }
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
};

// Goldberg's test: is there a subgraph with |E(H)|/|V(H)| > a/b?
// Returns that subgraph's vertex set, or empty if none.
std::vector<VertexId> denser_subgraph(const Graph& g, std::int64_t a, std::int64_t b) {
  const int n = static_cast<int>(g.vertex_count());
  const std::int64_t m = static_cast<std::int64_t>(g.edge_count());
  const int s = n, t = n + 1;
  MaxFlow net(n + 2);
  // Capacities scaled by b so the guess density a/b stays integral.
  for (int i = 0; i < n; ++i) {
    VertexId v = g.vertices()[i];
    std::int64_t deg = static_cast<std::int64_t>(g.degree(v));
    net.add_edge(s, i, b * m, 0);
    net.add_edge(i, t, b * m + 2 * a - b * deg, 0);
  }
  for (const Edge& e : g.edges()) {
    int iu = static_cast<int>(g.index_of(e.u));
    int iv = static_cast<int>(g.index_of(e.v));
    net.add_edge(iu, iv, b, b);
  }
  std::int64_t cut = net.run(s, t);
  if (cut >= b * m * n) return {};
  auto side = net.min_cut_side(s);
  std::vector<VertexId> sub;
  for (int i = 0; i < n; ++i)
    if (side[i]) sub.push_back(g.vertices()[i]);
  return sub;
}

Rat peeling_degeneracy(const Graph& g) {
  std::vector<std::size_t> deg(g.vertex_count());
  std::vector<bool> gone(g.vertex_count(), false);
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    deg[i] = g.degree(g.vertices()[i]);
  std::int64_t best = 0;
  for (std::size_t round = 0; round < g.vertex_count(); ++round) {
    std::size_t pick = SIZE_MAX;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      if (!gone[i] && (pick == SIZE_MAX || deg[i] < deg[pick])) pick = i;
    best = std::max<std::int64_t>(best, static_cast<std::int64_t>(deg[pick]));
    gone[pick] = true;
    for (VertexId w : g.neighbors(g.vertices()[pick])) {
      std::size_t iw = g.index_of(w);
      if (!gone[iw]) --deg[iw];
    }
  }
  return Rat(best);
}

}  // namespace

DensityBound degeneracy_bound(const Graph& g, std::size_t cap) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("degeneracy_bound: empty graph");
  if (g.vertex_count() > cap) return {peeling_degeneracy(g), false};
  if (g.edge_count() == 0) return {Rat(0), true};

  // Start from the whole graph's density and improve until no denser
  // subgraph exists; each step strictly increases the density, which takes
  // finitely many values, so this terminates with the exact maximum.
  std::vector<VertexId> best_set = g.vertices();
  Rat best = edge_density(g);
  for (;;) {
    auto sub = denser_subgraph(g, best.num(), best.den());
    if (sub.empty()) break;
    VertexSet keep(sub.begin(), sub.end());
    Graph h = g.induced(keep);
    Rat d = edge_density(h);
    if (!(d > best))
      throw std::logic_error("degeneracy_bound: flow step did not improve");
    best = d;
  }
  return {best, true};
}

}  // namespace localmds
