#include "localmds/minor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "localmds/errors.hpp"

namespace localmds {
namespace minor {

namespace {

// Graph restricted to at most 64 vertices, adjacency as bit masks.
// Index i corresponds to ids[i]; ids are sorted so index order = id order.
struct Local {
  std::vector<VertexId> ids;
  int n = 0;
  std::vector<std::uint64_t> adj;   // open neighborhood
  std::vector<std::uint64_t> ncl;   // closed neighborhood
  std::vector<std::uint64_t> feas;  // feas[u] bit w: some edge joins N[u], N[w]

  static Local from_graph(const Graph& g) {
    Local L;
    L.ids = g.vertices();
    L.n = static_cast<int>(L.ids.size());
    L.adj.assign(L.n, 0);
    for (const Edge& e : g.edges()) {
      int iu = static_cast<int>(g.index_of(e.u));
      int iv = static_cast<int>(g.index_of(e.v));
      L.adj[iu] |= 1ull << iv;
      L.adj[iv] |= 1ull << iu;
    }
    L.finish();
    return L;
  }

  // Build from explicit vertex/edge lists (used for deletion tests).
  static Local from_lists(const std::vector<VertexId>& verts,
                          const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Local L;
    L.ids = verts;
    L.n = static_cast<int>(verts.size());
    L.adj.assign(L.n, 0);
    auto idx = [&](VertexId v) {
      return static_cast<int>(std::lower_bound(L.ids.begin(), L.ids.end(), v) -
                              L.ids.begin());
    };
    for (auto [a, b] : edges) {
      int ia = idx(a), ib = idx(b);
      L.adj[ia] |= 1ull << ib;
      L.adj[ib] |= 1ull << ia;
    }
    L.finish();
    return L;
  }

  void finish() {
    ncl.assign(n, 0);
    for (int i = 0; i < n; ++i) ncl[i] = adj[i] | (1ull << i);
    feas.assign(n, 0);
    std::vector<std::uint64_t> reach(n, 0);
    for (int u = 0; u < n; ++u)
      for (std::uint64_t m = ncl[u]; m; m &= m - 1)
        reach[u] |= adj[std::countr_zero(m)];
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w)
        if (reach[u] & ncl[w]) feas[u] |= 1ull << w;
  }
};

struct Assignment {
  std::array<int, 3> left{};              // left center indices
  std::vector<int> right;                 // right center indices
  std::vector<std::pair<int, int>> edge;  // per pair (i,j): chosen (x, y)
};

// Backtracking search for depth-1 K_{3,t} minor models. Branch sets are kept
// tight: a center plus exactly the leaves that carry chosen cross edges.
// Every model reduces to such a tight one, so tight enumeration is complete.
class Search {
public:
  // sink: called per complete assignment; returns false to keep enumerating,
  // true to stop. nullptr sink = existence test (stops at first).
  using Sink = bool (*)(void*, const Local&, const Assignment&,
                        std::uint64_t base_mask);
  // prune: may declare that no completion of base_mask (plus vertices from
  // the allowed mask) can beat the bests tracked by the sink.
  using Prune = bool (*)(void*, const Local&, std::uint64_t base_mask,
                         std::uint64_t allowed_mask);

  Search(const Local& L, int t, std::uint64_t budget)
      : L_(L), t_(t), budget_(budget) {}

  bool run(Sink sink, void* ctx, Prune prune = nullptr) {
    if (L_.n < 3 + t_) return false;
    sink_ = sink;
    ctx_ = ctx;
    prune_ = prune;
    owner_.assign(L_.n, -1);
    asg_.right.assign(t_, -1);
    asg_.edge.assign(static_cast<std::size_t>(3 * t_), {-1, -1});
    cands_pool_.assign(static_cast<std::size_t>(3 * t_), {});
    found_ = false;
    pick_center(0);
    return found_;
  }

  bool budget_exhausted() const { return budget_ == 0; }

private:
  // Interleave left/right center choices so infeasible tuples die early.
  // Slot order: L0, R0, L1, R1, L2, R2, R3, ..., R(t-1).
  void pick_center(int slot) {
    if (found_ || budget_ == 0) return;
    const int total = 3 + t_;
    if (slot == total) {
      assign_pairs();
      return;
    }
    const bool is_left = slot < 6 && slot % 2 == 0;
    const int ord = is_left ? slot / 2 : (slot < 6 ? slot / 2 : slot - 3);

    std::uint64_t cand = L_.n >= 64 ? ~0ull : ((1ull << L_.n) - 1);
    if (is_left) {
      // Pair-feasible with every right center chosen so far; ascending.
      for (int j = 0; j < ord; ++j) cand &= L_.feas[asg_.right[j]];
      if (ord > 0) cand &= ~((2ull << asg_.left[ord - 1]) - 1);
      if (ord == 0 && fixed_l0_ >= 0) cand &= 1ull << fixed_l0_;
    } else {
      const int lefts_known = std::min(3, ord + 1);
      for (int i = 0; i < lefts_known; ++i) cand &= L_.feas[asg_.left[i]];
      if (ord > 0) cand &= ~((2ull << asg_.right[ord - 1]) - 1);
      // For t = 3 the two sides are interchangeable: demand R0 > L0.
      if (t_ == 3 && ord == 0) cand &= ~((2ull << asg_.left[0]) - 1);
      if (ord == 0 && fixed_r0_ >= 0) cand &= 1ull << fixed_r0_;
    }
    cand &= ~used_centers_;

    for (std::uint64_t m = cand; m && !found_ && budget_; m &= m - 1) {
      int c = std::countr_zero(m);
      if (is_left)
        asg_.left[ord] = c;
      else
        asg_.right[ord] = c;
      used_centers_ |= 1ull << c;
      pick_center(slot + 1);
      used_centers_ &= ~(1ull << c);
    }
  }

  // Second stage: choose one witnessing cross edge per (left, right) pair,
  // assigning endpoint vertices to branch sets, MRV pair order.
  void assign_pairs() {
    std::uint64_t reach = 0;
    base_mask_ = 0;
    for (int i = 0; i < 3; ++i) {
      owner_[asg_.left[i]] = i;
      base_mask_ |= 1ull << asg_.left[i];
      reach |= L_.ncl[asg_.left[i]];
    }
    for (int j = 0; j < t_; ++j) {
      owner_[asg_.right[j]] = 3 + j;
      base_mask_ |= 1ull << asg_.right[j];
      reach |= L_.ncl[asg_.right[j]];
    }
    tuple_reach_ = reach;
    bool centers_ok = anchor_ < 0 || ((reach >> anchor_) & 1);
    if (centers_ok) {
      pair_done_.assign(static_cast<std::size_t>(3 * t_), false);
      recurse_pairs(0);
    }
    for (int i = 0; i < 3; ++i) owner_[asg_.left[i]] = -1;
    for (int j = 0; j < t_; ++j) owner_[asg_.right[j]] = -1;
  }

  // Candidate cross edges for pair (i, j) under current ownership.
  int count_or_collect(int i, int j, std::vector<std::pair<int, int>>* out,
                       bool* offers_anchor = nullptr) {
    int count = 0;
    int ci = asg_.left[i], cj = asg_.right[j];
    for (std::uint64_t mx = L_.ncl[ci]; mx; mx &= mx - 1) {
      int x = std::countr_zero(mx);
      if (owner_[x] != -1 && owner_[x] != i) continue;
      std::uint64_t my = L_.adj[x] & L_.ncl[cj];
      for (; my; my &= my - 1) {
        int y = std::countr_zero(my);
        if (owner_[y] != -1 && owner_[y] != 3 + j) continue;
        ++count;
        if (offers_anchor && (x == anchor_ || y == anchor_))
          *offers_anchor = true;
        if (out) out->emplace_back(x, y);
      }
    }
    return count;
  }

  void recurse_pairs(int done) {
    if (found_ || budget_ == 0) return;
    if (--budget_ == 0) return;
    if (prune_ &&
        prune_(ctx_, L_, base_mask_, tuple_reach_ & ~base_mask_))
      return;
    if (done == 3 * t_) {
      if (anchor_ >= 0 && owner_[anchor_] == -1) return;
      if (sink_ == nullptr || sink_(ctx_, L_, asg_, base_mask_)) found_ = true;
      return;
    }
    // MRV: the unassigned pair with the fewest candidates. Candidate sets
    // only shrink down the tree, so an anchor no pair can place anymore
    // kills the whole subtree.
    const bool need_anchor = anchor_ >= 0 && owner_[anchor_] == -1;
    bool anchor_possible = !need_anchor;
    int best = -1, best_count = INT32_MAX;
    for (int p = 0; p < 3 * t_; ++p) {
      if (pair_done_[p]) continue;
      int c = count_or_collect(p / t_, p % t_, nullptr,
                               need_anchor ? &anchor_possible : nullptr);
      if (c == 0) return;
      if (c < best_count) {
        best_count = c;
        best = p;
      }
    }
    if (!anchor_possible) return;
    std::vector<std::pair<int, int>>& cands = cands_pool_[done];
    cands.clear();
    count_or_collect(best / t_, best % t_, &cands);
    pair_done_[best] = true;
    for (auto [x, y] : cands) {
      int ox = owner_[x], oy = owner_[y];
      std::uint64_t obase = base_mask_;
      owner_[x] = best / t_;
      owner_[y] = 3 + best % t_;
      base_mask_ |= (1ull << x) | (1ull << y);
      asg_.edge[best] = {x, y};
      recurse_pairs(done + 1);
      owner_[x] = ox;
      owner_[y] = oy;
      base_mask_ = obase;
      if (found_ || budget_ == 0) break;
    }
    pair_done_[best] = false;
    asg_.edge[best] = {-1, -1};
  }

public:
  int anchor_ = -1;    // local index that must end up in the model, or -1
  int fixed_l0_ = -1;  // restrict the first centers (parallel sharding)
  int fixed_r0_ = -1;

private:
  const Local& L_;
  int t_;
  std::uint64_t budget_;
  Sink sink_ = nullptr;
  void* ctx_ = nullptr;
  Prune prune_ = nullptr;
  Assignment asg_;
  std::vector<int8_t> owner_;
  std::vector<bool> pair_done_;
  std::vector<std::vector<std::pair<int, int>>> cands_pool_;  // per depth
  std::uint64_t used_centers_ = 0;
  std::uint64_t base_mask_ = 0;
  std::uint64_t tuple_reach_ = 0;
  bool found_ = false;
};

bool model_exists(const Local& L, int t, std::uint64_t budget = 50'000'000) {
  Search s(L, t, budget);
  bool hit = s.run(nullptr, nullptr);
  if (!hit && s.budget_exhausted())
    throw CapExceeded("minor search: backtracking budget exhausted");
  return hit;
}

// A tight candidate subgraph: sorted vertices, sorted edge list.
struct Cand {
  std::vector<VertexId> verts;
  std::vector<std::pair<VertexId, VertexId>> edges;
  friend bool operator<(const Cand& a, const Cand& b) {
    if (a.verts != b.verts) return a.verts < b.verts;
    return a.edges < b.edges;
  }
  friend bool operator==(const Cand& a, const Cand& b) {
    return a.verts == b.verts && a.edges == b.edges;
  }
  bool contains(VertexId v) const {
    return std::binary_search(verts.begin(), verts.end(), v);
  }
};

void fill_cand(const Local& L, const Assignment& a, int t,
               std::uint64_t base_mask, Cand& c) {
  c.verts.clear();
  c.edges.clear();
  for (std::uint64_t m = base_mask; m; m &= m - 1)
    c.verts.push_back(L.ids[std::countr_zero(m)]);  // ascending by id
  auto add_edge = [&](int x, int y) {
    if (x == y) return;
    VertexId a1 = L.ids[x], b1 = L.ids[y];
    c.edges.emplace_back(std::min(a1, b1), std::max(a1, b1));
  };
  for (int p = 0; p < 3 * t; ++p) {
    auto [x, y] = a.edge[p];
    add_edge(x, y);                       // the chosen cross edge
    add_edge(a.left[p / t], x);           // star edges to attachment leaves
    add_edge(a.right[p % t], y);
  }
  std::sort(c.edges.begin(), c.edges.end());
  c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
}

// Minimality: every single-vertex and single-edge deletion destroys
// K_{3,3} depth-1 minor containment.
bool is_minimal(const Cand& k) {
  for (std::size_t drop = 0; drop < k.verts.size(); ++drop) {
    std::vector<VertexId> vs;
    for (std::size_t i = 0; i < k.verts.size(); ++i)
      if (i != drop) vs.push_back(k.verts[i]);
    std::vector<std::pair<VertexId, VertexId>> es;
    for (auto [a, b] : k.edges)
      if (a != k.verts[drop] && b != k.verts[drop]) es.emplace_back(a, b);
    if (model_exists(Local::from_lists(vs, es), 3)) return false;
  }
  for (std::size_t drop = 0; drop < k.edges.size(); ++drop) {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (std::size_t i = 0; i < k.edges.size(); ++i)
      if (i != drop) es.push_back(k.edges[i]);
    if (model_exists(Local::from_lists(k.verts, es), 3)) return false;
  }
  return true;
}

// Tracks, per vertex, the lexicographically smallest minimal candidate seen
// so far. Keeping only running bests avoids materializing the (possibly
// huge) candidate set; minimality is tested only on improvements.
struct BestTracker {
  std::vector<VertexId> ids;  // sorted, index-aligned with best
  std::vector<std::optional<Cand>> best;
  int only_index = -1;  // anchored searches track a single vertex
  bool all_defined = false;
  Cand worst;    // lex-max over the defined bests, valid when all_defined
  Cand scratch;  // avoids reallocation on the hot path

  std::size_t index_of(VertexId u) const {
    return static_cast<std::size_t>(
        std::lower_bound(ids.begin(), ids.end(), u) - ids.begin());
  }

  void refresh_worst() {
    all_defined = true;
    const Cand* w = nullptr;
    for (const auto& b : best) {
      if (!b) {
        all_defined = false;
        return;
      }
      if (!w || *w < *b) w = &*b;
    }
    if (w) worst = *w;
  }

  // The reference sequence pruning may compare against: the anchored best,
  // or the lex-max best over the vertices a tuple can reach (valid once all
  // of them have one). The region cache survives across the consecutive
  // prune calls of one center tuple.
  mutable std::uint64_t cached_region = 0;
  mutable const std::vector<VertexId>* cached_ref = nullptr;

  const std::vector<VertexId>* prune_reference(std::uint64_t region) const {
    if (only_index >= 0) {
      const auto& b = best[static_cast<std::size_t>(only_index)];
      return b ? &b->verts : nullptr;
    }
    if (region != cached_region) {
      cached_region = region;
      cached_ref = nullptr;
      const Cand* w = nullptr;
      for (std::uint64_t m = region; m; m &= m - 1) {
        const auto& b = best[static_cast<std::size_t>(std::countr_zero(m))];
        if (!b) return nullptr;  // cached_ref stays null for this region
        if (!w || *w < *b) w = &*b;
      }
      cached_ref = &w->verts;
    }
    return cached_ref;
  }

  void offer(const Local& L, const Assignment& a, std::uint64_t base_mask) {
    // Vertex sequences decide most comparisons; build them first and defer
    // the edge list until actually needed.
    scratch.verts.clear();
    for (std::uint64_t m = base_mask; m; m &= m - 1)
      scratch.verts.push_back(L.ids[std::countr_zero(m)]);
    bool edges_built = false;
    auto better_than = [&](const Cand& b) {
      if (scratch.verts != b.verts) return scratch.verts < b.verts;
      if (!edges_built) {
        fill_cand(L, a, 3, base_mask, scratch);
        edges_built = true;
      }
      return scratch.edges < b.edges;
    };

    if (only_index >= 0) {
      auto& b = best[static_cast<std::size_t>(only_index)];
      if (b && !better_than(*b)) return;
      if (!edges_built) fill_cand(L, a, 3, base_mask, scratch);
      if (is_minimal(scratch)) b = scratch;
      return;
    }
    if (all_defined && !better_than(worst)) return;
    bool improves_any = false;
    for (VertexId u : scratch.verts)
      if (const auto& b = best[index_of(u)]; !b || better_than(*b)) {
        improves_any = true;
        break;
      }
    if (!improves_any) return;
    if (!edges_built) fill_cand(L, a, 3, base_mask, scratch);
    if (!is_minimal(scratch)) return;
    for (VertexId u : scratch.verts)
      if (auto& b = best[index_of(u)]; !b || scratch < *b) b = scratch;
    refresh_worst();
    cached_region = 0;  // stored bests moved; drop the dangling reference
    cached_ref = nullptr;
  }
};

bool best_sink(void* ctx, const Local& L, const Assignment& a,
               std::uint64_t base_mask) {
  static_cast<BestTracker*>(ctx)->offer(L, a, base_mask);
  return false;  // keep enumerating
}

// No completion of base (drawing extra vertices from `allowed`) can have a
// vertex sequence lexicographically below base + {allowed below max(base)};
// prune when even that bound exceeds the tracked reference.
bool best_prune(void* ctx, const Local& L, std::uint64_t base_mask,
                std::uint64_t allowed_mask) {
  auto* tracker = static_cast<BestTracker*>(ctx);
  const std::vector<VertexId>* ref =
      tracker->prune_reference(base_mask | allowed_mask);
  if (!ref || base_mask == 0) return false;
  int top = 63 - std::countl_zero(base_mask);
  std::uint64_t lb =
      base_mask | (allowed_mask & ((top == 63 ? 0 : (1ull << (top + 1))) - 1));
  // Compare the ascending id sequence of lb with *ref; prune iff strictly
  // greater (equal sequences may still win on the edge list).
  std::size_t i = 0;
  for (std::uint64_t m = lb; m; m &= m - 1) {
    VertexId id = L.ids[std::countr_zero(m)];
    if (i == ref->size()) return true;  // ref is a proper prefix: lb > ref
    if (id < (*ref)[i]) return false;
    if (id > (*ref)[i]) return true;
    ++i;
  }
  return false;  // lb <= ref
}

// Enumerates every tight candidate once and keeps per-vertex lex-minima.
// The enumeration shards over the first left center; shard results merge by
// per-vertex lex-minimum, so the outcome is schedule-independent.
BestTracker scan_candidates(const Graph& g, int anchor_index, Exec exec) {
  Local L = Local::from_graph(g);
  const std::size_t n = static_cast<std::size_t>(L.n);
  // Shard over the first left center; merging the per-shard minima keeps
  // the result schedule-independent.
  std::vector<BestTracker> shards(n);
  for_each_index(n, exec, [&](std::size_t shard) {
    BestTracker& t = shards[shard];
    t.ids = L.ids;
    t.best.assign(n, std::nullopt);
    t.only_index = anchor_index;
    Search s(L, 3, 600'000'000ull);
    s.anchor_ = anchor_index;
    s.fixed_l0_ = static_cast<int>(shard);
    s.run(&best_sink, &t, &best_prune);
    if (s.budget_exhausted())
      throw CapExceeded("canonical_k33_subgraph: enumeration budget exhausted");
  });
  BestTracker out;
  out.ids = L.ids;
  out.best.assign(n, std::nullopt);
  out.only_index = anchor_index;
  for (BestTracker& sh : shards)
    for (std::size_t i = 0; i < n; ++i)
      if (sh.best[i] && (!out.best[i] || *sh.best[i] < *out.best[i]))
        out.best[i] = std::move(sh.best[i]);
  return out;
}

Graph cand_to_graph(const Cand& k) { return Graph(k.verts, k.edges); }

}  // namespace

bool validate_model(const Graph& g, const MinorModel& model) {
  if (static_cast<int>(model.branch_sets.size()) != 3 + model.t) return false;
  VertexSet all;
  for (const auto& [label, set] : model.branch_sets) {
    if (set.empty()) return false;
    for (VertexId v : set) {
      if (!g.has_vertex(v)) return false;
      if (!all.insert(v).second) return false;  // overlap
    }
    bool has_center = false;
    for (VertexId c : set) {
      bool ok = true;
      for (VertexId v : set)
        if (v != c && !g.has_edge(c, v)) {
          ok = false;
          break;
        }
      if (ok) {
        has_center = true;
        break;
      }
    }
    if (!has_center) return false;
  }
  auto crossing = [&](const VertexSet& a, const VertexSet& b) {
    for (VertexId x : a)
      for (VertexId y : b)
        if (g.has_edge(x, y)) return true;
    return false;
  };
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= model.t; ++j) {
      auto li = model.branch_sets.find("L" + std::to_string(i));
      auto rj = model.branch_sets.find("R" + std::to_string(j));
      if (li == model.branch_sets.end() || rj == model.branch_sets.end())
        return false;
      if (!crossing(li->second, rj->second)) return false;
    }
  return true;
}

std::optional<MinorModel> find_k3t_depth1_minor(const Graph& g, int t,
                                                std::size_t cap) {
  if (t < 3) throw std::invalid_argument("find_k3t_depth1_minor: t must be >= 3");
  if (g.vertex_count() > cap || g.vertex_count() > 64)
    throw CapExceeded("find_k3t_depth1_minor: graph has " +
                      std::to_string(g.vertex_count()) + " vertices, cap is " +
                      std::to_string(std::min<std::size_t>(cap, 64)));
  Local L = Local::from_graph(g);

  struct FirstModel {
    MinorModel model;
    int t;
  } out;
  out.t = t;

  auto sink = +[](void* ctx, const Local& L, const Assignment& a,
                  std::uint64_t) {
    auto* fm = static_cast<FirstModel*>(ctx);
    std::map<int, VertexSet> sets;
    for (int i = 0; i < 3; ++i) sets[i].insert(L.ids[a.left[i]]);
    for (int j = 0; j < fm->t; ++j) sets[3 + j].insert(L.ids[a.right[j]]);
    for (int p = 0; p < 3 * fm->t; ++p) {
      sets[p / fm->t].insert(L.ids[a.edge[p].first]);
      sets[3 + p % fm->t].insert(L.ids[a.edge[p].second]);
    }
    for (int i = 0; i < 3; ++i)
      fm->model.branch_sets["L" + std::to_string(i + 1)] = sets[i];
    for (int j = 0; j < fm->t; ++j)
      fm->model.branch_sets["R" + std::to_string(j + 1)] = sets[3 + j];
    fm->model.t = fm->t;
    return true;
  };

  Search s(L, t, 200'000'000ull);
  bool hit = s.run(sink, &out);
  if (!hit && s.budget_exhausted())
    throw CapExceeded("find_k3t_depth1_minor: search budget exhausted");
  if (!hit) return std::nullopt;
  return out.model;
}

std::optional<Graph> canonical_k33_subgraph(const Graph& g, VertexId v,
                                            std::size_t ball_cap, Exec exec) {
  VertexSet b = ball(g, v, 6);  // throws on unknown vertex
  if (b.size() > ball_cap || b.size() > 64)
    throw CapExceeded("canonical_k33_subgraph: radius-6 ball around " +
                      std::to_string(v) + " has " + std::to_string(b.size()) +
                      " vertices, cap is " +
                      std::to_string(std::min<std::size_t>(ball_cap, 64)));
  Graph h = g.induced(b);
  int anchor = static_cast<int>(h.index_of(v));
  BestTracker tracker = scan_candidates(h, anchor, exec);
  const auto& found = tracker.best[tracker.index_of(v)];
  if (!found) return std::nullopt;
  return cand_to_graph(*found);
}

std::map<VertexId, Graph> canonical_k33_all(const Graph& g,
                                            std::size_t ball_cap, Exec exec) {
  if (g.vertex_count() > ball_cap || g.vertex_count() > 64)
    throw CapExceeded("canonical_k33_all: graph above cap");
  std::map<VertexId, Graph> out;
  BestTracker tracker = scan_candidates(g, -1, exec);
  for (VertexId v : g.vertices()) {
    const auto& found = tracker.best[tracker.index_of(v)];
    if (found) out.emplace(v, cand_to_graph(*found));
  }
  return out;
}

int genus_complete_bipartite(int m, int n, bool orientable) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("genus_complete_bipartite: m, n >= 2");
  long p = static_cast<long>(m - 2) * static_cast<long>(n - 2);
  long d = orientable ? 4 : 2;
  return static_cast<int>((p + d - 1) / d);
}

int excluded_k3t_for_genus(int genus, bool orientable) {
  if (genus < 0)
    throw std::invalid_argument("excluded_k3t_for_genus: genus >= 0");
  return orientable ? 4 * genus + 3 : 2 * genus + 3;
}

}  // namespace minor
}  // namespace localmds
