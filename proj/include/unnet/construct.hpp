#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "unnet/graph.hpp"
#include "unnet/util.hpp"

namespace unnet {

/// Joining recipe: left and right are treated as vertex-disjoint (right ids
/// are offset by left.vertex_count() in the result) and connected by the
/// pairing edges. Endpoints must be distinct on each side.
struct JoinSpec {
  Graph left;
  Graph right;
  std::vector<std::pair<int, int>> pairs;  // (u in left, v in right)
};

/// Disjoint union of two unique-neighborhood graphs plus the pairing edges.
/// Inputs must pass is_unn_naive. Note that the construction does not always
/// preserve the property: low-degree vertices on both sides can end up with
/// identical neighborhoods in the result (e.g. joining two single edges by a
/// crossed pair of edges yields a 4-cycle). Callers that need a guarantee
/// should re-check the result.
Graph join_unns(const JoinSpec& spec);

/// Disjoint union of two k-connected graphs plus exactly k pairing edges with
/// distinct endpoints; the result is again k-connected.
Graph join_k_connected(const Graph& left, const Graph& right,
                       const std::vector<std::pair<int, int>>& pairs, int k);

/// BFS spanning tree rooted at vertex 0. Deterministic for a fixed input.
Graph spanning_tree(const Graph& g);

/// Checks that the map v -> nb(v), restricted to the vertices of degree >= 2,
/// is injective. Input must be a tree; the result is provably always true and
/// this function exists as a machine validator of that fact.
bool inner_nodes_unique(const Graph& g);

struct UnnSubgraphResult {
  Graph kept;                      // relabeled to 0..kept_vertices.size()-1
  std::vector<int> kept_vertices;  // original ids, ascending
  std::vector<int> excluded;       // original ids
  Graph chosen_tree;               // spanning tree on the original ids
  /// Excluded vertices whose degree in the input graph exceeds 1 (they are
  /// only guaranteed to be leaves of the chosen tree).
  std::vector<int> excluded_with_degree_above_one;
};

/// Unique-neighborhood subgraph via spanning-tree trimming. If the input is
/// already a UNN it is kept whole. Otherwise the tree's inner vertices are
/// kept with their tree edges, and every inner vertex with at most one inner
/// tree neighbor re-attaches its smallest adjacent tree leaf; the remaining
/// leaves are excluded. The output always has pairwise-distinct
/// neighborhoods, and every excluded vertex has tree-degree 1.
UnnSubgraphResult maximal_unn_subgraph(const Graph& g);

using EdgeCosts = std::map<Edge, Rational>;

struct ExtensionOptions {
  enum class Method { Auto, Exhaustive, BranchAndBound };
  Method method = Method::Auto;           // Auto: exhaustive for n <= 6
  std::uint64_t node_budget = 2'000'000;  // branch-and-bound node limit
};

struct ExtensionSolution {
  std::vector<Edge> added_edges;
  Rational cost;
  bool optimal = false;  // true only when the search provably completed
  std::uint64_t nodes_explored = 0;
};

/// Minimum-cost set of new edges whose addition makes the graph a UNN.
/// Costs default to 1 per candidate edge; keys of `costs` must be non-edges
/// of g in canonical order. Feasible for every simple graph (the complete
/// graph is always a UNN).
ExtensionSolution smallest_unn_extension(const Graph& g, const EdgeCosts& costs = {},
                                         const ExtensionOptions& options = {});

}  // namespace unnet
