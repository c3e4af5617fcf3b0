#pragma once

#include <optional>

#include "localmds/clustering.hpp"
#include "localmds/graph.hpp"

namespace localmds {
namespace ptas {

struct RefineOptions {
  std::optional<std::size_t> exact_cap;  // default: oracle cap
  Exec exec = Exec::Parallel;
};

struct RefineReport {
  VertexSet refined;
  std::size_t cluster_count = 0;
  std::size_t largest_cluster = 0;
  /// Set when the contracted dominator graph is denser than nabla1_bound;
  /// the (1+epsilon) guarantee rests on that bound, so a violation is
  /// surfaced instead of silently proceeding.
  bool density_warning = false;
};

/// Refines a dominating set d with |d| <= c*gamma(g) into a
/// (1+epsilon)-approximation: vertices join the radius-1 part of their
/// smallest-id dominator, the parts are contracted to H with unit edge
/// weights, H is clustered with delta = epsilon/(2c*nabla1_bound), and each
/// uncontracted cluster is solved exactly. Clusters above the exact-solve
/// cap are an error suggesting a larger epsilon.
RefineReport refine_report(const Graph& g, const VertexSet& d,
                           const Rat& epsilon, const Rat& c,
                           const Rat& nabla1_bound,
                           const clustering::ExpansionBound& expansion_bound,
                           const RefineOptions& opts = {});

VertexSet refine(const Graph& g, const VertexSet& d, const Rat& epsilon,
                 const Rat& c, const Rat& nabla1_bound,
                 const clustering::ExpansionBound& expansion_bound,
                 const RefineOptions& opts = {});

}  // namespace ptas
}  // namespace localmds
