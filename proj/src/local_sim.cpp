#include "localmds/local_sim.hpp"

namespace localmds {
namespace sim {

GatherProgram gather_ball_program(unsigned r) {
  GatherProgram p;
  p.init = [](VertexId id, std::size_t) {
    GatherState s;
    s.self = id;
    return s;
  };
  p.on_round = [r](GatherState& s, const std::map<VertexId, GatherMsg>& inbox,
                   const NodeCtx& ctx) {
    if (ctx.round == 0) {
      s.target = r;
      s.known[s.self] = {ctx.neighbors.begin(), ctx.neighbors.end()};
    }
    for (const auto& [from, msg] : inbox)
      for (const auto& [vert, adj] : msg) s.known.emplace(vert, adj);

    Step<GatherMsg> step;
    if (static_cast<unsigned>(ctx.round) >= r) {
      step.halt = true;
      return step;
    }
    for (VertexId nb : ctx.neighbors) step.outbox.emplace(nb, s.known);
    return step;
  };
  p.output = [r](const GatherState& s) {
    // BFS over the gathered adjacency to depth r; s.known covers every
    // vertex within distance r, so this is exactly G[N^r[self]].
    VertexSet seen{s.self};
    std::vector<VertexId> frontier{s.self};
    for (unsigned depth = 0; depth < r && !frontier.empty(); ++depth) {
      std::vector<VertexId> next;
      for (VertexId u : frontier) {
        auto it = s.known.find(u);
        if (it == s.known.end()) continue;
        for (VertexId w : it->second)
          if (seen.insert(w).second) next.push_back(w);
      }
      frontier = std::move(next);
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u : seen) {
      auto it = s.known.find(u);
      if (it == s.known.end()) continue;
      for (VertexId w : it->second)
        if (u < w && seen.count(w)) edges.emplace_back(u, w);
    }
    return Graph({seen.begin(), seen.end()}, edges);
  };
  return p;
}

}  // namespace sim
}  // namespace localmds
