#pragma once

#include <optional>
#include <vector>

#include "unnet/graph.hpp"

namespace unnet {

/// A set of s-t paths that pairwise share no vertices except the endpoints.
struct PathSet {
  int source = 0;
  int target = 0;
  std::vector<std::vector<int>> paths;  // each path runs source..target

  bool operator==(const PathSet&) const = default;
};

struct DisjointPathsResult {
  int requested = 0;
  /// Paths actually achievable: equals requested when feasible, otherwise the
  /// true maximum number of internally-vertex-disjoint s-t paths.
  int found = 0;
  std::optional<PathSet> path_set;  // engaged iff found >= requested

  bool feasible() const { return path_set.has_value(); }
};

/// Up to k internally-vertex-disjoint s-t paths, extracted from an integral
/// max flow on the vertex-split digraph (every internal vertex becomes a
/// unit-capacity arc). Deterministic: augmentation and decomposition both
/// prefer the smallest next vertex id.
DisjointPathsResult disjoint_paths(const Graph& g, int s, int t, int k);

/// Exact vertex connectivity: the minimum over non-adjacent pairs of the
/// max number of disjoint paths; complete graphs return n-1 by convention.
/// Requires an undirected graph with n >= 2.
int vertex_connectivity(const Graph& g);

bool is_k_connected(const Graph& g, int k);

}  // namespace unnet
