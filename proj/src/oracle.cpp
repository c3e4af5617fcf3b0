#include "localmds/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "localmds/errors.hpp"

namespace localmds {
namespace oracle {

bool is_dominating(const Graph& g, const VertexSet& s) {
  std::vector<bool> dominated(g.vertex_count(), false);
  for (VertexId v : s) {
    dominated[g.index_of(v)] = true;  // throws on foreign vertex
    for (VertexId w : g.neighbors(v)) dominated[g.index_of(w)] = true;
  }
  return std::all_of(dominated.begin(), dominated.end(), [](bool b) { return b; });
}

std::size_t default_cap() {
  if (const char* env = std::getenv("LOCALMDS_ORACLE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 25;
}

VertexSet greedy_mds(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> dominated(n, false);
  std::size_t left = n;
  VertexSet out;
  while (left > 0) {
    VertexId best = 0;
    std::size_t best_gain = 0;
    bool have = false;
    for (VertexId v : g.vertices()) {
      std::size_t gain = dominated[g.index_of(v)] ? 0 : 1;
      for (VertexId w : g.neighbors(v))
        if (!dominated[g.index_of(w)]) ++gain;
      if (!have || gain > best_gain) {
        have = true;
        best = v;
        best_gain = gain;
      }
    }
    out.insert(best);
    left -= best_gain;
    dominated[g.index_of(best)] = true;
    for (VertexId w : g.neighbors(best)) dominated[g.index_of(w)] = true;
  }
  return out;
}

namespace {

// Shared search state over dense vertex indices.
struct Solver {
  const Graph& g;
  std::size_t n;
  std::vector<std::vector<std::size_t>> closed;  // closed neighborhoods
  std::vector<std::vector<std::size_t>> branch;  // same, high-degree first
  std::size_t maxdeg_plus1;

  explicit Solver(const Graph& gr)
      : g(gr), n(gr.vertex_count()), closed(n), branch(n) {
    std::size_t maxdeg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      VertexId v = g.vertices()[i];
      closed[i].push_back(i);
      for (VertexId w : g.neighbors(v)) closed[i].push_back(g.index_of(w));
      std::sort(closed[i].begin(), closed[i].end());
      maxdeg = std::max(maxdeg, g.degree(v));
    }
    maxdeg_plus1 = maxdeg + 1;
    for (std::size_t i = 0; i < n; ++i) {
      branch[i] = closed[i];
      std::sort(branch[i].begin(), branch[i].end(),
                [&](std::size_t a, std::size_t b) {
                  if (closed[a].size() != closed[b].size())
                    return closed[a].size() > closed[b].size();
                  return a < b;
                });
    }
  }

  std::size_t lower_bound(std::size_t uncovered) const {
    return (uncovered + maxdeg_plus1 - 1) / maxdeg_plus1;
  }

  // Phase A: find gamma. cover[] counts how many chosen vertices dominate i.
  std::size_t best_size;

  void find_gamma(std::vector<int>& cover, std::size_t uncovered,
                  std::size_t chosen) {
    if (uncovered == 0) {
      best_size = std::min(best_size, chosen);
      return;
    }
    if (chosen + lower_bound(uncovered) >= best_size) return;

    // Branch on the undominated vertex with the fewest candidate dominators.
    std::size_t pick = SIZE_MAX, pick_opts = SIZE_MAX;
    for (std::size_t i = 0; i < n; ++i)
      if (cover[i] == 0 && closed[i].size() < pick_opts) {
        pick = i;
        pick_opts = closed[i].size();
      }
    for (std::size_t w : branch[pick]) {
      std::size_t newly = 0;
      for (std::size_t x : closed[w])
        if (cover[x]++ == 0) ++newly;
      find_gamma(cover, uncovered - newly, chosen + 1);
      for (std::size_t x : closed[w])
        --cover[x];
    }
  }

  // Phase B: the lexicographically smallest dominating set of size gamma,
  // found by ascending-id DFS; the first complete solution is the answer.
  std::vector<std::size_t> current, result;

  bool find_lex(std::vector<int>& cover, std::size_t uncovered,
                std::size_t next_candidate) {
    if (uncovered == 0) {
      result = current;
      return true;
    }
    if (current.size() + lower_bound(uncovered) > best_size) return false;
    if (current.size() == best_size) return false;
    // Every vertex left of next_candidate is fixed, so the smallest
    // still-undominated vertex must be coverable by a candidate >= it.
    std::size_t first_uncov = 0;
    while (cover[first_uncov] != 0) ++first_uncov;
    std::size_t limit = closed[first_uncov].back();
    if (limit < next_candidate) return false;

    for (std::size_t w = next_candidate; w < n; ++w) {
      std::size_t newly = 0;
      for (std::size_t x : closed[w])
        if (cover[x]++ == 0) ++newly;
      // In a minimum set, every member covers something its smaller
      // members do not, so zero-gain candidates can be skipped.
      if (newly > 0) {
        current.push_back(w);
        if (find_lex(cover, uncovered - newly, w + 1)) return true;
        current.pop_back();
      }
      for (std::size_t x : closed[w]) --cover[x];
    }
    return false;
  }
};

}  // namespace

VertexSet exact_mds(const Graph& g, std::optional<std::size_t> cap) {
  const std::size_t limit = cap.value_or(default_cap());
  if (g.vertex_count() > limit)
    throw CapExceeded("exact_mds: graph has " + std::to_string(g.vertex_count()) +
                      " vertices, cap is " + std::to_string(limit));
  if (g.vertex_count() == 0) return {};

  Solver s(g);
  s.best_size = greedy_mds(g).size();
  std::vector<int> cover(s.n, 0);
  s.find_gamma(cover, s.n, 0);

  std::fill(cover.begin(), cover.end(), 0);
  if (!s.find_lex(cover, s.n, 0))
    throw std::logic_error("exact_mds: lex phase found no solution");
  VertexSet out;
  for (std::size_t i : s.result) out.insert(g.vertices()[i]);
  return out;
}

std::size_t gamma(const Graph& g, std::optional<std::size_t> cap) {
  return exact_mds(g, cap).size();
}

Rat ratio(const Graph& g, const VertexSet& s, std::optional<std::size_t> cap) {
  if (!is_dominating(g, s))
    throw std::invalid_argument("ratio: set does not dominate the graph");
  return Rat(static_cast<std::int64_t>(s.size()),
             static_cast<std::int64_t>(gamma(g, cap)));
}

}  // namespace oracle
}  // namespace localmds
