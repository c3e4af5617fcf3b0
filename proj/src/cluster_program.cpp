#include <bit>

#include "localmds/clustering.hpp"

namespace localmds {
namespace clustering {

namespace {

int cv_iterations(std::size_t n_hint) {
  std::size_t k = std::max<std::size_t>(n_hint, 1);
  int iters = 0;
  while (k > 6) {
    std::size_t bits = std::bit_width(k - 1);  // ceil(log2 k) for k >= 2
    k = 2 * bits;
    ++iters;
  }
  return iters;
}

int cv_step(int color, int parent_color) {
  int i = std::countr_zero(static_cast<unsigned>(color ^ parent_color));
  return 2 * i + ((color >> i) & 1);
}

}  // namespace

HeavyStarProgram heavy_star_program(std::size_t n_hint) {
  const int cv = cv_iterations(n_hint);

  HeavyStarProgram p;
  p.init = [](VertexId id, std::size_t) {
    HeavyStarState s;
    s.self = id;
    s.center = id;
    return s;
  };
  p.on_round = [cv](HeavyStarState& s, const std::map<VertexId, HeavyStarMsg>& inbox,
                    const sim::NodeCtx& ctx) {
    const Graph& g = *ctx.graph;
    sim::Step<HeavyStarMsg> step;
    auto broadcast = [&](const HeavyStarMsg& m) {
      for (VertexId nb : ctx.neighbors) step.outbox.emplace(nb, m);
    };
    const int r = ctx.round;

    if (r == 0) {
      // Select the heaviest incident edge, ties to the smallest neighbor.
      std::optional<VertexId> best;
      Rat best_w(0);
      for (VertexId w : ctx.neighbors) {
        Rat wt = g.edge_weight(s.self, w);
        if (!best || wt > best_w) {
          best = w;
          best_w = wt;
        }
      }
      s.parent = best;  // provisional; merged arcs resolved next round
      HeavyStarMsg m;
      m.pick = best ? *best : s.self;
      broadcast(m);
      return step;
    }

    if (r == 1) {
      // Arcs: mutual selections are kept once, directed small -> large.
      std::map<VertexId, VertexId> picks;
      for (const auto& [from, m] : inbox) picks[from] = m.pick;
      const std::optional<VertexId> my_choice = s.parent;
      for (const auto& [u, target] : picks)
        if (target == s.self) {
          bool mutual = my_choice && *my_choice == u;
          if (!mutual || u < s.self) s.children.push_back(u);
        }
      if (my_choice) {
        bool mutual = picks.count(*my_choice) && picks[*my_choice] == s.self;
        if (mutual && s.self > *my_choice) s.parent = std::nullopt;  // consumed
      }
      s.color = static_cast<int>(s.self);
      HeavyStarMsg m;
      m.color = s.color;
      broadcast(m);
      return step;
    }

    auto parent_color = [&]() -> int {
      if (!s.parent) return s.color == 0 ? 1 : 0;  // pretend-parent for roots
      auto it = inbox.find(*s.parent);
      return it == inbox.end() ? (s.color == 0 ? 1 : 0) : it->second.color;
    };

    if (r < 2 + cv) {  // Cole-Vishkin reduction to 6 colors
      s.color = cv_step(s.color, parent_color());
      HeavyStarMsg m;
      m.color = s.color;
      broadcast(m);
      return step;
    }

    const int sd = r - (2 + cv);
    if (sd < 6) {  // three shift-down iterations, two rounds each
      if (sd % 2 == 0) {
        s.prev_color = s.color;  // children shift onto this value
        s.color = s.parent ? parent_color() : (s.color + 1) % 6;
      } else {
        const int target = 5 - sd / 2;
        if (s.color == target) {
          int pc = s.parent ? parent_color() : -1;
          for (int c = 0; c < 3; ++c)
            if (c != pc && (s.children.empty() || c != s.prev_color)) {
              s.color = c;
              break;
            }
        }
      }
      HeavyStarMsg m;
      m.color = s.color;
      broadcast(m);
      return step;
    }

    const int bond = sd - 6;
    if (bond == 0) {
      // Weight-dominant side decides the role wish.
      Rat in_sum(0);
      for (VertexId c : s.children) in_sum += g.edge_weight(s.self, c);
      bool leaf_want =
          s.parent && g.edge_weight(s.self, *s.parent) > in_sum;
      s.type = leaf_want ? 1 : 0;
      for (const auto& [from, m] : inbox) s.nbr_color[from] = m.color;
      HeavyStarMsg m;
      m.type = s.type;
      m.color = s.color;
      broadcast(m);
      return step;
    }
    if (bond == 1) {
      for (const auto& [from, m] : inbox) {
        s.nbr_type[from] = m.type;
        s.nbr_color[from] = m.color;
      }
      s.promoted = s.type == 1 && s.parent && s.nbr_type[*s.parent] == 1 &&
                   s.color > s.nbr_color[*s.parent];
      HeavyStarMsg m;
      m.promoted = s.promoted;
      broadcast(m);
      return step;
    }
    // Resolve: leaves bond to centers or promoted parents; all else centers.
    for (const auto& [from, m] : inbox) s.nbr_promoted[from] = m.promoted;
    bool parent_takes = s.parent && (s.nbr_type[*s.parent] == 0 ||
                                     s.nbr_promoted[*s.parent]);
    s.center = (s.type == 1 && !s.promoted && parent_takes) ? *s.parent : s.self;
    step.halt = true;
    return step;
  };
  p.output = [](const HeavyStarState& s) { return s.center; };
  return p;
}

SimulatedStars simulate_heavy_star(const Graph& g, Exec exec) {
  std::size_t hint = g.vertices().empty()
                         ? 1
                         : static_cast<std::size_t>(g.vertices().back()) + 1;
  sim::RunOptions opt;
  opt.exec = exec;
  auto tr = sim::run(g, heavy_star_program(hint),
                     sim::default_max_rounds(g.vertex_count()), opt);

  std::map<VertexId, VertexSet> groups;
  for (const auto& [v, center] : tr.outputs) groups[center];
  for (const auto& [v, center] : tr.outputs)
    if (v != center) groups.at(center).insert(v);
  std::vector<Star> stars;
  for (const auto& [center, leaves] : groups) stars.push_back({center, leaves});

  SimulatedStars out{contract_stars(g, stars), tr.rounds_used};
  return out;
}

}  // namespace clustering
}  // namespace localmds
