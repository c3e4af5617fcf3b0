#include "localmds/mds_programs.hpp"

#include <algorithm>

namespace localmds {
namespace mds {

namespace {

// Induced view of everything within distance `radius` of self, rebuilt from
// a flooded adjacency table. The table covers every vertex in the ball, so
// the view is exactly G[N^radius[self]].
Graph view_from_known(const std::map<VertexId, std::vector<VertexId>>& known,
                      VertexId self, unsigned radius) {
  VertexSet seen{self};
  std::vector<VertexId> frontier{self};
  for (unsigned d = 0; d < radius && !frontier.empty(); ++d) {
    std::vector<VertexId> next;
    for (VertexId u : frontier) {
      auto it = known.find(u);
      if (it == known.end()) continue;
      for (VertexId w : it->second)
        if (seen.insert(w).second) next.push_back(w);
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u : seen) {
    auto it = known.find(u);
    if (it == known.end()) continue;
    for (VertexId w : it->second)
      if (u < w && seen.count(w)) edges.emplace_back(u, w);
  }
  return Graph({seen.begin(), seen.end()}, edges);
}

}  // namespace

LenzenProgram modified_lenzen_program(const Rat& c) {
  const int budget = static_cast<int>((c * Rat(2)).floor());

  LenzenProgram p;
  p.init = [](VertexId id, std::size_t) {
    LenzenState s;
    s.self = id;
    return s;
  };
  p.on_round = [budget](LenzenState& s, const std::map<VertexId, LenzenMsg>& inbox,
                        const sim::NodeCtx& ctx) {
    if (ctx.round == 0)
      s.known[s.self] = {ctx.neighbors.begin(), ctx.neighbors.end()};
    for (const auto& [from, msg] : inbox)
      for (const auto& [vert, adj] : msg.known) s.known.emplace(vert, adj);

    sim::Step<LenzenMsg> step;
    if (ctx.round < 5) {  // flood the radius-5 view
      for (VertexId nb : ctx.neighbors) step.outbox[nb].known = s.known;
      return step;
    }
    if (ctx.round == 5) {
      Graph view = view_from_known(s.known, s.self, 5);
      auto in_d = [&](VertexId u) { return !coverable(view, u, budget); };
      s.out.in_d = in_d(s.self);

      bool dominated = false;
      for (VertexId u : ball(view, s.self, 1))
        if (in_d(u)) {
          dominated = true;
          break;
        }
      if (!dominated) {
        // Residual degrees of N[self] against N[D] within the view.
        VertexSet d_near;
        for (VertexId y : ball(view, s.self, 4))
          if (in_d(y)) d_near.insert(y);
        VertexSet nd = closed_neighborhood(view, d_near);
        auto residual = [&](VertexId w) {
          std::size_t r = nd.count(w) ? 0 : 1;
          for (VertexId x : view.neighbors(w))
            if (!nd.count(x)) ++r;
          return r;
        };
        VertexId best = s.self;
        std::size_t best_res = residual(s.self);
        for (VertexId w : view.neighbors(s.self)) {
          std::size_t r = residual(w);
          if (r > best_res || (r == best_res && w < best)) {
            best = w;
            best_res = r;
          }
        }
        if (best == s.self) {
          s.self_elected = true;
        } else {
          LenzenMsg m;
          m.election = true;
          step.outbox.emplace(best, std::move(m));
        }
      }
      return step;
    }
    // Round 6: collect elections and stop.
    s.out.in_dprime = s.self_elected;
    for (const auto& [from, msg] : inbox)
      if (msg.election) s.out.in_dprime = true;
    step.halt = true;
    return step;
  };
  p.output = [](const LenzenState& s) { return s.out; };
  return p;
}

GenusProgram genus_program(int genus, std::size_t ball_cap) {
  if (genus < 0) throw std::invalid_argument("genus_program: genus >= 0");
  const unsigned radius = static_cast<unsigned>(24 * genus + 8);

  GenusProgram p;
  p.init = [](VertexId id, std::size_t) {
    GenusState s;
    s.self = id;
    return s;
  };
  p.on_round = [genus, ball_cap, radius](GenusState& s,
                                         const std::map<VertexId, sim::GatherMsg>& inbox,
                                         const sim::NodeCtx& ctx) {
    if (ctx.round == 0)
      s.known[s.self] = {ctx.neighbors.begin(), ctx.neighbors.end()};
    for (const auto& [from, msg] : inbox)
      for (const auto& [vert, adj] : msg) s.known.emplace(vert, adj);

    sim::Step<sim::GatherMsg> step;
    if (static_cast<unsigned>(ctx.round) < radius) {
      for (VertexId nb : ctx.neighbors) step.outbox.emplace(nb, s.known);
      return step;
    }
    Graph view = view_from_known(s.known, s.self, radius);
    MdsResult local = genus_algorithm(view, genus, ball_cap, Exec::Serial);
    s.out.in_d = local.phase1_set.count(s.self) > 0;
    s.out.in_pre = local.preprocessing_set.count(s.self) > 0;
    s.out.in_dprime = local.phase2_set.count(s.self) > 0;
    step.halt = true;
    return step;
  };
  p.output = [](const GenusState& s) { return s.out; };
  return p;
}

MdsResult result_from_node_outputs(const std::map<VertexId, NodeOut>& outs) {
  MdsResult r;
  for (const auto& [v, o] : outs) {
    if (o.in_d) r.phase1_set.insert(v);
    if (o.in_pre) r.preprocessing_set.insert(v);
    if (o.in_dprime) r.phase2_set.insert(v);
  }
  r.dominating_set = r.phase1_set;
  r.dominating_set.insert(r.preprocessing_set.begin(), r.preprocessing_set.end());
  r.dominating_set.insert(r.phase2_set.begin(), r.phase2_set.end());
  return r;
}

MdsResult simulate_modified_lenzen(const Graph& g, const Rat& c, Exec exec) {
  sim::RunOptions opt;
  opt.exec = exec;
  auto tr = sim::run(g, modified_lenzen_program(c),
                     sim::default_max_rounds(g.vertex_count()), opt);
  MdsResult r = result_from_node_outputs(tr.outputs);
  r.rounds_used = tr.rounds_used;
  r.locality_radius = 5;
  return r;
}

MdsResult simulate_genus(const Graph& g, int genus, std::size_t ball_cap,
                         Exec exec) {
  sim::RunOptions opt;
  opt.exec = exec;
  auto tr = sim::run(g, genus_program(genus, ball_cap),
                     std::max(sim::default_max_rounds(g.vertex_count()),
                              24 * genus + 16),
                     opt);
  MdsResult r = result_from_node_outputs(tr.outputs);
  r.rounds_used = tr.rounds_used;
  r.locality_radius = 24 * genus + 8;
  return r;
}

}  // namespace mds
}  // namespace localmds
