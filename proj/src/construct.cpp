#include "unnet/construct.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "unnet/connectivity.hpp"
#include "unnet/unn.hpp"

namespace unnet {

namespace {

void require_undirected(const Graph& g, const char* who) {
  if (g.is_directed())
    throw std::invalid_argument(std::string(who) + ": undirected graph required");
}

// Disjoint union with right ids shifted past the left graph, plus one edge per
// pair. Pair endpoints must be in range and distinct on each side.
Graph join_with_pairs(const Graph& left, const Graph& right,
                      const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("join: need at least one pair");
  std::vector<char> used_left(left.vertex_count(), 0), used_right(right.vertex_count(), 0);
  for (const auto& [u, v] : pairs) {
    if (u < 0 || u >= left.vertex_count() || v < 0 || v >= right.vertex_count())
      throw std::invalid_argument("join: pair endpoint out of range");
    if (used_left[u] || used_right[v])
      throw std::invalid_argument("join: repeated pair endpoint");
    used_left[u] = used_right[v] = 1;
  }
  const int offset = left.vertex_count();
  std::vector<Edge> edges = left.edges();
  for (const auto& [u, v] : right.edges()) edges.emplace_back(u + offset, v + offset);
  for (const auto& [u, v] : pairs) edges.emplace_back(u, v + offset);
  return Graph(offset + right.vertex_count(), false, std::move(edges));
}

}  // namespace

Graph join_unns(const JoinSpec& spec) {
  require_undirected(spec.left, "join_unns");
  require_undirected(spec.right, "join_unns");
  if (!is_unn_naive(spec.left).is_unn)
    throw std::invalid_argument("join_unns: left input is not a UNN");
  if (!is_unn_naive(spec.right).is_unn)
    throw std::invalid_argument("join_unns: right input is not a UNN");
  return join_with_pairs(spec.left, spec.right, spec.pairs);
}

Graph join_k_connected(const Graph& left, const Graph& right,
                       const std::vector<std::pair<int, int>>& pairs, int k) {
  require_undirected(left, "join_k_connected");
  require_undirected(right, "join_k_connected");
  if (k < 1) throw std::invalid_argument("join_k_connected: need k >= 1");
  if (static_cast<int>(pairs.size()) != k)
    throw std::invalid_argument("join_k_connected: expected exactly k pairs");
  if (!is_k_connected(left, k) || !is_k_connected(right, k))
    throw std::invalid_argument("join_k_connected: input is not k-connected");
  Graph h = join_with_pairs(left, right, pairs);
  assert(vertex_connectivity(h) >= k);
  return h;
}

Graph spanning_tree(const Graph& g) {
  require_undirected(g, "spanning_tree");
  const int n = g.vertex_count();
  if (n == 0) return Graph();
  if (!g.connected()) throw std::invalid_argument("spanning_tree: disconnected graph");
  std::vector<char> seen(n, 0);
  std::vector<Edge> tree_edges;
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.out_neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        tree_edges.emplace_back(std::min(u, w), std::max(u, w));
        queue.push_back(w);
      }
    }
  }
  return Graph(n, false, std::move(tree_edges));
}

bool inner_nodes_unique(const Graph& g) {
  require_undirected(g, "inner_nodes_unique");
  if (g.edge_count() != g.vertex_count() - 1 || !g.connected())
    throw std::invalid_argument("inner_nodes_unique: input is not a tree");
  std::vector<std::vector<int>> fingerprints;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 2) fingerprints.push_back(g.out_neighbors(v));
  std::sort(fingerprints.begin(), fingerprints.end());
  return std::adjacent_find(fingerprints.begin(), fingerprints.end()) == fingerprints.end();
}

UnnSubgraphResult maximal_unn_subgraph(const Graph& g) {
  require_undirected(g, "maximal_unn_subgraph");
  if (!g.connected())
    throw std::invalid_argument("maximal_unn_subgraph: disconnected graph");

  UnnSubgraphResult result;
  result.chosen_tree = spanning_tree(g);
  const int n = g.vertex_count();

  if (is_unn_naive(g).is_unn) {
    result.kept = g;
    result.kept_vertices.resize(n);
    std::iota(result.kept_vertices.begin(), result.kept_vertices.end(), 0);
    return result;
  }

  // Non-UNN input with n >= 3 from here on (every connected graph on fewer
  // vertices already has unique neighborhoods).
  const Graph& tree = result.chosen_tree;
  std::vector<char> inner(n, 0);
  for (int v = 0; v < n; ++v) inner[v] = tree.degree(v) >= 2;

  std::vector<char> kept(n, 0);
  std::vector<Edge> kept_edges;
  for (int v = 0; v < n; ++v) kept[v] = inner[v];
  for (const auto& [u, v] : tree.edges())
    if (inner[u] && inner[v]) kept_edges.emplace_back(u, v);

  // An inner vertex with at most one inner tree neighbor is a leaf of the
  // trimmed tree; it re-attaches its smallest adjacent tree leaf. Tree leaves
  // have a unique neighbor, so no leaf is claimed twice, and the attachment
  // gives every trimmed-tree leaf a private neighbor that no other kept
  // vertex can share.
  for (int v = 0; v < n; ++v) {
    if (!inner[v]) continue;
    int inner_neighbors = 0;
    for (int w : tree.out_neighbors(v)) inner_neighbors += inner[w];
    if (inner_neighbors > 1) continue;
    for (int w : tree.out_neighbors(v)) {
      if (!inner[w]) {
        kept[w] = 1;
        kept_edges.emplace_back(std::min(v, w), std::max(v, w));
        break;
      }
    }
  }

  std::vector<int> index(n, -1);
  for (int v = 0; v < n; ++v) {
    if (kept[v]) {
      index[v] = static_cast<int>(result.kept_vertices.size());
      result.kept_vertices.push_back(v);
    } else {
      result.excluded.push_back(v);
      if (g.degree(v) > 1) result.excluded_with_degree_above_one.push_back(v);
    }
  }
  std::vector<Edge> relabeled;
  relabeled.reserve(kept_edges.size());
  for (const auto& [u, v] : kept_edges) relabeled.emplace_back(index[u], index[v]);
  result.kept = Graph(static_cast<int>(result.kept_vertices.size()), false,
                      std::move(relabeled));
  assert(is_unn_naive(result.kept).is_unn);
  return result;
}

namespace {

// Mutable adjacency-set view used by the extension search.
struct WorkGraph {
  explicit WorkGraph(const Graph& g) : n(g.vertex_count()), nbr(n) {
    for (const auto& [u, v] : g.edges()) {
      nbr[u].push_back(v);
      nbr[v].push_back(u);
    }
    for (auto& a : nbr) std::sort(a.begin(), a.end());
  }

  void add(const Edge& e) {
    insert_sorted(nbr[e.first], e.second);
    insert_sorted(nbr[e.second], e.first);
  }
  void remove(const Edge& e) {
    erase_sorted(nbr[e.first], e.second);
    erase_sorted(nbr[e.second], e.first);
  }

  // Groups of vertices with identical neighborhoods, as disjoint witness
  // pairs: consecutive members of each duplicate group.
  std::vector<std::pair<int, int>> colliding_pairs() const {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (nbr[a] != nbr[b]) return nbr[a] < nbr[b];
      return a < b;
    });
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n;) {
      int j = i + 1;
      while (j < n && nbr[order[j]] == nbr[order[i]]) ++j;
      for (int a = i; a + 1 < j; a += 2) pairs.emplace_back(order[a], order[a + 1]);
      i = j;
    }
    return pairs;
  }

  bool is_unn() const { return colliding_pairs().empty(); }

  int n;
  std::vector<std::vector<int>> nbr;

 private:
  static void insert_sorted(std::vector<int>& a, int v) {
    a.insert(std::lower_bound(a.begin(), a.end(), v), v);
  }
  static void erase_sorted(std::vector<int>& a, int v) {
    a.erase(std::lower_bound(a.begin(), a.end(), v));
  }
};

struct Candidate {
  Edge edge;
  Rational cost;
};

struct BnbSearch {
  WorkGraph work;
  std::vector<Candidate> candidates;
  std::uint64_t budget;

  Rational best_cost;
  std::vector<Edge> best_set;
  std::vector<Edge> chosen;
  std::uint64_t explored = 0;
  bool completed = true;

  BnbSearch(const Graph& g, std::vector<Candidate> cand, std::uint64_t node_budget)
      : work(g), candidates(std::move(cand)), budget(node_budget) {
    // Adding every candidate completes the graph, which always has unique
    // neighborhoods; that seeds the incumbent.
    best_cost = Rational(0);
    for (const auto& c : candidates) {
      best_cost = best_cost + c.cost;
      best_set.push_back(c.edge);
    }
  }

  // Admissible bound: each vertex-disjoint colliding pair needs at least one
  // incident undecided edge, and a single edge can serve at most two such
  // pairs, so half the sum of per-pair minima never overshoots.
  bool lower_bound(int from, const std::vector<std::pair<int, int>>& pairs,
                   Rational& out) const {
    Rational sum(0);
    for (const auto& [u, v] : pairs) {
      bool found = false;
      Rational cheapest(0);
      for (std::size_t i = from; i < candidates.size(); ++i) {
        const auto& [a, b] = candidates[i].edge;
        if (a == u || a == v || b == u || b == v) {
          if (!found || candidates[i].cost < cheapest) {
            found = true;
            cheapest = candidates[i].cost;
          }
        }
      }
      if (!found) return false;  // the pair can no longer be separated
      sum = sum + cheapest;
    }
    out = sum.halved();
    return true;
  }

  void run(std::size_t idx, Rational current_cost) {
    if (explored >= budget) {
      completed = false;
      return;
    }
    ++explored;

    const auto pairs = work.colliding_pairs();
    if (pairs.empty()) {
      if (current_cost < best_cost) {
        best_cost = current_cost;
        best_set = chosen;
      }
      return;
    }
    if (idx >= candidates.size()) return;

    Rational bound(0);
    if (!lower_bound(static_cast<int>(idx), pairs, bound)) return;
    if (!(current_cost + bound < best_cost)) return;

    const Candidate& c = candidates[idx];
    chosen.push_back(c.edge);
    work.add(c.edge);
    run(idx + 1, current_cost + c.cost);
    work.remove(c.edge);
    chosen.pop_back();
    run(idx + 1, current_cost);
  }
};

}  // namespace

ExtensionSolution smallest_unn_extension(const Graph& g, const EdgeCosts& costs,
                                         const ExtensionOptions& options) {
  require_undirected(g, "smallest_unn_extension");
  const int n = g.vertex_count();

  std::vector<Candidate> candidates;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) candidates.push_back({{u, v}, Rational(1)});
  for (const auto& [edge, cost] : costs) {
    if (cost.negative())
      throw std::invalid_argument("smallest_unn_extension: negative edge cost");
    auto it = std::find_if(candidates.begin(), candidates.end(),
                           [&](const Candidate& c) { return c.edge == edge; });
    if (it == candidates.end())
      throw std::invalid_argument("smallest_unn_extension: cost key is not a non-edge");
    it->cost = cost;
  }

  ExtensionSolution solution;
  if (is_unn_naive(g).is_unn) {
    solution.cost = Rational(0);
    solution.optimal = true;
    return solution;
  }

  auto method = options.method;
  if (method == ExtensionOptions::Method::Auto)
    method = n <= 6 ? ExtensionOptions::Method::Exhaustive
                    : ExtensionOptions::Method::BranchAndBound;

  if (method == ExtensionOptions::Method::Exhaustive) {
    if (candidates.size() > 26)
      throw std::invalid_argument(
          "smallest_unn_extension: too many candidate edges for exhaustive search");
    WorkGraph work(g);
    bool have_best = false;
    Rational best_cost(0);
    std::uint32_t best_mask = 0;
    const std::uint32_t total = 1u << candidates.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      ++solution.nodes_explored;
      Rational cost(0);
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if (mask & (1u << i)) cost = cost + candidates[i].cost;
      if (have_best && !(cost < best_cost)) continue;
      WorkGraph trial = work;
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if (mask & (1u << i)) trial.add(candidates[i].edge);
      if (trial.is_unn()) {
        have_best = true;
        best_cost = cost;
        best_mask = mask;
      }
    }
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (best_mask & (1u << i)) solution.added_edges.push_back(candidates[i].edge);
    solution.cost = best_cost;
    solution.optimal = true;
    return solution;
  }

  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.edge < b.edge;
  });
  BnbSearch search(g, std::move(candidates), options.node_budget);
  search.run(0, Rational(0));
  solution.added_edges = search.best_set;
  std::sort(solution.added_edges.begin(), solution.added_edges.end());
  solution.cost = search.best_cost;
  solution.optimal = search.completed;
  solution.nodes_explored = search.explored;
  return solution;
}

}  // namespace unnet
