#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "localmds/errors.hpp"
#include "localmds/exec.hpp"
#include "localmds/graph.hpp"

namespace localmds {
namespace sim {

/// Synchronous LOCAL-model engine. One round = every active node performs a
/// local computation, sends one message to each chosen neighbor, and
/// receives the messages its neighbors sent that round. Messages are opaque
/// values of unbounded size; complexity is counted in rounds only.

struct NodeCtx {
  VertexId id;
  std::span<const VertexId> neighbors;
  int round;  // index of this compute phase; 0 happens before any exchange
  // Host graph, for incident edge weights. Programs must stay r-local:
  // purity and locality are contracts, checked by the schedule-independence
  // property and audit_locality.
  const Graph* graph = nullptr;
};

template <class Msg>
struct Step {
  std::map<VertexId, Msg> outbox;
  bool halt = false;
};

/// A per-node program. on_round must be deterministic in (state, inbox);
/// outbox keys must be neighbor ids. A node that halts stops sending and
/// its output is frozen.
template <class S, class M, class O>
struct NodeProgram {
  using State = S;
  using Message = M;
  using Output = O;

  std::function<S(VertexId id, std::size_t degree)> init;
  std::function<Step<M>(S& state, const std::map<VertexId, M>& inbox,
                        const NodeCtx& ctx)>
      on_round;
  std::function<O(const S& state)> output;
};

template <class O>
struct RunTranscript {
  std::map<VertexId, O> outputs;
  int rounds_used = 0;           // number of delivery phases executed
  std::size_t messages_sent = 0;
};

template <class O>
struct MaxRoundsExceeded final : MaxRoundsError {
  RunTranscript<O> partial;
  MaxRoundsExceeded(const std::string& what, RunTranscript<O> p)
      : MaxRoundsError(what), partial(std::move(p)) {}
};

struct RunOptions {
  Exec exec = Exec::Parallel;
  /// Serial evaluation order for the compute phase (schedule-independence
  /// tests); must be a permutation of the vertices. Ignored when parallel.
  const std::vector<VertexId>* eval_order = nullptr;
};

inline int log_star(std::size_t n) {
  int k = 0;
  double x = static_cast<double>(n);
  while (x > 1.0) {
    x = std::log2(x);
    ++k;
  }
  return k;
}

/// Generous default round budget covering every algorithm in this library.
inline int default_max_rounds(std::size_t n) { return 10 * (log_star(n) + 20); }

template <class S, class M, class O>
RunTranscript<O> run(const Graph& g, const NodeProgram<S, M, O>& prog,
                     int max_rounds, RunOptions opt = {}) {
  if (max_rounds < 0)
    throw std::invalid_argument("sim::run: max_rounds must be >= 0");
  const std::size_t n = g.vertex_count();
  std::vector<S> states;
  states.reserve(n);
  for (VertexId v : g.vertices()) states.push_back(prog.init(v, g.degree(v)));

  std::vector<char> halted(n, 0);  // not vector<bool>: written concurrently
  std::vector<std::map<VertexId, M>> inboxes(n);
  std::vector<std::map<VertexId, M>> outboxes(n);

  RunTranscript<O> tr;
  auto snapshot = [&] {
    RunTranscript<O> s;
    s.rounds_used = tr.rounds_used;
    s.messages_sent = tr.messages_sent;
    for (std::size_t i = 0; i < n; ++i)
      s.outputs.emplace(g.vertices()[i], prog.output(states[i]));
    return s;
  };

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  if (opt.eval_order) {
    if (opt.eval_order->size() != n)
      throw std::invalid_argument("sim::run: eval_order must cover all vertices");
    for (std::size_t i = 0; i < n; ++i) order[i] = g.index_of((*opt.eval_order)[i]);
  }

  int round = 0;
  for (;;) {
    // Compute phase: pure per-node steps; safe to run concurrently.
    for_each_index(n, opt.exec, [&](std::size_t k) {
      std::size_t i = order[k];
      if (halted[i]) return;
      VertexId v = g.vertices()[i];
      NodeCtx ctx{v, g.neighbors(v), round, &g};
      Step<M> step = prog.on_round(states[i], inboxes[i], ctx);
      outboxes[i] = std::move(step.outbox);
      if (step.halt) halted[i] = 1;
    });
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [to, msg] : outboxes[i])
        if (!g.has_edge(g.vertices()[i], to))
          throw std::invalid_argument(
              "sim::run: node " + std::to_string(g.vertices()[i]) +
              " addressed non-neighbor " + std::to_string(to));
      inboxes[i].clear();
    }

    if (std::all_of(halted.begin(), halted.end(), [](char h) { return h != 0; })) {
      // Final outboxes are dropped: every node has halted, nobody reads.
      for (auto& ob : outboxes) ob.clear();
      break;
    }
    if (round >= max_rounds) {
      tr.rounds_used = round;
      throw MaxRoundsExceeded<O>(
          "sim::run: max_rounds = " + std::to_string(max_rounds) + " exhausted",
          snapshot());
    }

    // Delivery phase (this is what the round count measures).
    for (std::size_t i = 0; i < n; ++i) {
      VertexId from = g.vertices()[i];
      for (auto& [to, msg] : outboxes[i]) {
        inboxes[g.index_of(to)].emplace(from, std::move(msg));
        ++tr.messages_sent;
      }
      outboxes[i].clear();
    }
    ++round;
  }

  tr.rounds_used = round;
  for (std::size_t i = 0; i < n; ++i)
    tr.outputs.emplace(g.vertices()[i], prog.output(states[i]));
  return tr;
}

/// --- the r-round snapshot program -------------------------------------

struct GatherState {
  VertexId self = 0;
  unsigned target = 0;
  std::map<VertexId, std::vector<VertexId>> known;  // vertex -> its adjacency
};

using GatherMsg = std::map<VertexId, std::vector<VertexId>>;
using GatherProgram = NodeProgram<GatherState, GatherMsg, Graph>;

/// After exactly r rounds every node v outputs the induced subgraph
/// G[N^r[v]]: each node announces its own adjacency in round 0 and everyone
/// floods what it knows, so the announcement of a vertex at distance d
/// arrives at v in round d.
GatherProgram gather_ball_program(unsigned r);

/// Runs prog on g and on `perturbations` seeded random edits strictly
/// outside N^r[v] (edge add/remove between outside vertices, fresh vertex
/// attached to outside vertices); true iff v's output never changes.
template <class S, class M, class O>
bool audit_locality(const Graph& g, const NodeProgram<S, M, O>& prog,
                    VertexId v, unsigned r, int perturbations,
                    std::uint64_t seed) {
  const int budget = default_max_rounds(g.vertex_count() + 4);
  const O base = run(g, prog, budget).outputs.at(v);
  const VertexSet inside = ball(g, v, r);

  std::vector<VertexId> outside;
  for (VertexId u : g.vertices())
    if (!inside.count(u)) outside.push_back(u);

  std::mt19937_64 rng(seed);
  VertexId fresh = g.vertices().empty() ? 1 : g.vertices().back() + 1;

  for (int trial = 0; trial < perturbations; ++trial) {
    std::vector<VertexId> verts = g.vertices();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);

    int kind = std::uniform_int_distribution<int>(0, 2)(rng);
    bool edited = false;
    for (int attempt = 0; attempt < 3 && !edited; ++attempt, kind = (kind + 1) % 3) {
      if (kind == 0 && outside.size() >= 2) {  // add an outside-outside edge
        for (int tries = 0; tries < 32; ++tries) {
          std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
          VertexId a = outside[pick(rng)], b = outside[pick(rng)];
          if (a == b || g.has_edge(a, b)) continue;
          edges.emplace_back(a, b);
          edited = true;
          break;
        }
      } else if (kind == 1) {  // remove an edge lying outside
        std::vector<std::size_t> cand;
        for (std::size_t i = 0; i < edges.size(); ++i)
          if (!inside.count(edges[i].first) && !inside.count(edges[i].second))
            cand.push_back(i);
        if (!cand.empty()) {
          std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
          edges.erase(edges.begin() +
                      static_cast<std::ptrdiff_t>(cand[pick(rng)]));
          edited = true;
        }
      } else if (kind == 2 && !outside.empty()) {  // fresh vertex, outside links
        VertexId w = fresh++;
        verts.push_back(w);
        std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
        int links = std::uniform_int_distribution<int>(1, 2)(rng);
        VertexSet chosen;
        for (int l = 0; l < links; ++l) chosen.insert(outside[pick(rng)]);
        for (VertexId u : chosen) edges.emplace_back(u, w);
        edited = true;
      }
    }
    if (!edited) continue;  // no legal edit exists outside the ball

    Graph mutated(verts, edges);
    if (run(mutated, prog, budget).outputs.at(v) != base) return false;
  }
  return true;
}

}  // namespace sim
}  // namespace localmds
