#include "unnet/construct.hpp"

#include <algorithm>

#include "doctest.h"
#include "support/generators.hpp"
#include "unnet/connectivity.hpp"
#include "unnet/graph.hpp"
#include "unnet/unn.hpp"

using namespace unnet;

namespace {

// Independent optimum for the extension problem: try every subset of
// non-edges. Test-side oracle, kept separate from the library search.
Rational brute_extension_cost(const Graph& g, const EdgeCosts& costs = {}) {
  std::vector<Edge> candidates;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) candidates.emplace_back(u, v);
  REQUIRE(candidates.size() <= 20);
  Rational best(0);
  bool have = false;
  for (std::uint32_t mask = 0; mask < (1u << candidates.size()); ++mask) {
    std::vector<Edge> edges = g.edges();
    Rational cost(0);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (mask & (1u << i)) {
        edges.push_back(candidates[i]);
        const auto it = costs.find(candidates[i]);
        cost = cost + (it == costs.end() ? Rational(1) : it->second);
      }
    }
    if (is_unn_naive(Graph(g.vertex_count(), false, edges)).is_unn) {
      if (!have || cost < best) {
        best = cost;
        have = true;
      }
    }
  }
  REQUIRE(have);
  return best;
}

}  // namespace

TEST_CASE("join_unns fixtures") {
  SUBCASE("two K2 with one pair gives the 4-vertex line") {
    const Graph h = join_unns({Graph::complete(2), Graph::complete(2), {{0, 0}}});
    CHECK(h == Graph(4, false, {{0, 1}, {0, 2}, {2, 3}}));
    CHECK(is_unn_naive(h).is_unn);
  }
  SUBCASE("two K4 with four pairs") {
    const Graph h = join_unns(
        {Graph::complete(4), Graph::complete(4), {{0, 0}, {1, 1}, {2, 2}, {3, 3}}});
    CHECK(h.vertex_count() == 8);
    CHECK(is_unn_naive(h).is_unn);
    CHECK(vertex_connectivity(h) >= 3);
  }
  SUBCASE("non-UNN input is rejected") {
    CHECK_THROWS_AS(join_unns({Graph::complete_bipartite(2, 2), Graph::complete(2), {{0, 0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(join_unns({Graph::complete(2), Graph::complete_bipartite(2, 2), {{0, 0}}}),
                    std::invalid_argument);
  }
  SUBCASE("pair validation") {
    CHECK_THROWS_AS(join_unns({Graph::complete(2), Graph::complete(2), {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(join_unns({Graph::complete(3), Graph::complete(3), {{0, 0}, {0, 1}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(join_unns({Graph::complete(3), Graph::complete(3), {{0, 0}, {1, 0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(join_unns({Graph::complete(3), Graph::complete(3), {{0, 5}}}),
                    std::invalid_argument);
  }
}

TEST_CASE("joining does not always preserve unique neighborhoods") {
  // both sides are UNNs, but the crossed pairing closes a 4-cycle
  const Graph h =
      join_unns({Graph::complete(2), Graph::complete(2), {{0, 1}, {1, 0}}});
  const auto verdict = is_unn_naive(h);
  CHECK_FALSE(verdict.is_unn);

  // and a leaf-to-leaf pairing of two 4-paths collides across the seam
  const Graph p4 = Graph::path(4);
  const Graph h2 = join_unns({p4, p4, {{0, 1}, {1, 0}}});
  CHECK_FALSE(is_unn_naive(h2).is_unn);
}

TEST_CASE("random joins of dense UNNs usually stay UNNs") {
  SplitMix64 rng(67);
  int kept = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n1 = 6 + static_cast<int>(rng.below(5));
    const int n2 = 6 + static_cast<int>(rng.below(5));
    const Graph left = testsupport::random_unn(n1, rng);
    const Graph right = testsupport::random_unn(n2, rng);
    const int k = 1 + static_cast<int>(rng.below(3));
    std::vector<int> us(n1), vs(n2);
    std::iota(us.begin(), us.end(), 0);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) {
      std::swap(us[i], us[i + rng.below(us.size() - i)]);
      std::swap(vs[i], vs[i + rng.below(vs.size() - i)]);
      pairs.emplace_back(us[i], vs[i]);
    }
    if (is_unn_naive(join_unns({left, right, pairs})).is_unn) ++kept;
  }
  CHECK(kept >= 95);  // failures concentrate on low-degree seams
}

TEST_CASE("join_k_connected preserves connectivity") {
  SUBCASE("fixtures") {
    const Graph h2 = join_k_connected(Graph::complete(3), Graph::complete(3),
                                      {{0, 0}, {1, 1}}, 2);
    CHECK(h2.vertex_count() == 6);
    CHECK(vertex_connectivity(h2) >= 2);

    const Graph h1 =
        join_k_connected(Graph::complete(2), Graph::complete(2), {{0, 0}}, 1);
    CHECK(vertex_connectivity(h1) >= 1);

    const Graph h4 = join_k_connected(Graph::complete(5), Graph::complete(5),
                                      {{0, 0}, {1, 1}, {2, 2}, {3, 3}}, 4);
    CHECK(vertex_connectivity(h4) >= 4);
    CHECK(is_unn_naive(h4).is_unn);  // both properties survive this join
  }
  SUBCASE("precondition failures") {
    CHECK_THROWS_AS(join_k_connected(Graph::path(3), Graph::complete(3), {{0, 0}, {1, 1}}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(join_k_connected(Graph::complete(3), Graph::complete(3), {{0, 0}}, 2),
                    std::invalid_argument);
  }
  SUBCASE("random joins, exact connectivity check") {
    SplitMix64 rng(71);
    for (int trial = 0; trial < 60; ++trial) {
      const int k = 1 + static_cast<int>(rng.below(3));
      auto build = [&](int extra_joins) {
        Graph g = Graph::complete(k + 1);
        for (int j = 0; j < extra_joins; ++j) {
          std::vector<std::pair<int, int>> pairs;
          std::vector<int> us(g.vertex_count()), vs(k + 1);
          std::iota(us.begin(), us.end(), 0);
          std::iota(vs.begin(), vs.end(), 0);
          for (int i = 0; i < k; ++i) {
            std::swap(us[i], us[i + rng.below(us.size() - i)]);
            std::swap(vs[i], vs[i + rng.below(vs.size() - i)]);
            pairs.emplace_back(us[i], vs[i]);
          }
          g = join_k_connected(g, Graph::complete(k + 1), pairs, k);
        }
        return g;
      };
      const Graph h = build(1 + static_cast<int>(rng.below(2)));
      CHECK(vertex_connectivity(h) >= k);
    }
  }
}

TEST_CASE("spanning_tree is the BFS tree from vertex 0") {
  SUBCASE("idempotent on trees") {
    const Graph t = Graph::path(5);
    CHECK(spanning_tree(t) == t);
  }
  SUBCASE("K4 gives the star at 0") {
    CHECK(spanning_tree(Graph::complete(4)) == Graph::star(3));
  }
  SUBCASE("C4") {
    CHECK(spanning_tree(Graph::cycle(4)) == Graph(4, false, {{0, 1}, {0, 3}, {1, 2}}));
  }
  SUBCASE("disconnected input is rejected") {
    CHECK_THROWS_AS(spanning_tree(Graph(3, false, {{0, 1}})), std::invalid_argument);
  }
  SUBCASE("always a tree containing only graph edges") {
    SplitMix64 rng(73);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(15));
      const Graph g = testsupport::random_connected_graph(n, 0.3, rng);
      const Graph t = spanning_tree(g);
      CHECK(t.edge_count() == n - 1);
      CHECK(t.connected());
      for (const auto& [u, v] : t.edges()) CHECK(g.has_edge(u, v));
    }
  }
}

TEST_CASE("inner_nodes_unique validates trees and always holds") {
  CHECK(inner_nodes_unique(Graph::path(4)));
  CHECK(inner_nodes_unique(Graph::star(4)));
  CHECK_THROWS_AS(inner_nodes_unique(Graph::cycle(4)), std::invalid_argument);
  CHECK_THROWS_AS(inner_nodes_unique(Graph(4, false, {{0, 1}, {2, 3}})),
                  std::invalid_argument);

  SplitMix64 rng(79);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(50));
    CHECK(inner_nodes_unique(testsupport::random_tree(n, rng)));
  }
}

TEST_CASE("maximal_unn_subgraph fixtures") {
  SUBCASE("star keeps the center and one leaf") {
    const auto r = maximal_unn_subgraph(Graph::star(4));
    CHECK(r.kept_vertices == std::vector<int>{0, 1});
    CHECK(r.excluded == std::vector<int>{2, 3, 4});
    CHECK(r.kept == Graph::complete(2));
    CHECK(is_unn_naive(r.kept).is_unn);
    CHECK(r.excluded_with_degree_above_one.empty());
  }
  SUBCASE("line graph is already a UNN and kept whole") {
    const auto r = maximal_unn_subgraph(Graph::path(4));
    CHECK(r.kept == Graph::path(4));
    CHECK(r.excluded.empty());
  }
  SUBCASE("K4 kept whole") {
    const auto r = maximal_unn_subgraph(Graph::complete(4));
    CHECK(r.kept == Graph::complete(4));
    CHECK(r.excluded.empty());
    CHECK(is_unn_naive(r.kept).is_unn);
  }
  SUBCASE("disconnected input is rejected") {
    CHECK_THROWS_AS(maximal_unn_subgraph(Graph(3, false, {{0, 1}})), std::invalid_argument);
  }
}

TEST_CASE("re-attaching a second leaf of the star breaks the property") {
  const auto r = maximal_unn_subgraph(Graph::star(4));
  REQUIRE(r.kept_vertices == std::vector<int>{0, 1});
  // add excluded leaf 2 with its tree edge {0,2}: leaves 1 and 2 now share {0}
  const Graph extended = Graph(3, false, {{0, 1}, {0, 2}});
  const auto verdict = is_unn_naive(extended);
  CHECK_FALSE(verdict.is_unn);
  CHECK(verdict.witness == std::pair{1, 2});
}

TEST_CASE("maximal_unn_subgraph output is always a UNN with leaf-only exclusions") {
  SplitMix64 rng(83);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(29));
    const Graph g = testsupport::random_connected_graph(n, rng.unit() * 0.5, rng);
    const auto r = maximal_unn_subgraph(g);
    CHECK(is_unn_naive(r.kept).is_unn);
    for (int v : r.excluded) CHECK(r.chosen_tree.degree(v) == 1);
    // kept edges map back to edges of g
    for (const auto& [a, b] : r.kept.edges())
      CHECK(g.has_edge(r.kept_vertices[a], r.kept_vertices[b]));
    CHECK(r.kept_vertices.size() + r.excluded.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("smallest_unn_extension fixtures") {
  SUBCASE("already a UNN costs nothing") {
    const auto sol = smallest_unn_extension(Graph::path(4));
    CHECK(sol.added_edges.empty());
    CHECK(sol.cost == Rational(0));
    CHECK(sol.optimal);
  }
  SUBCASE("K_{2,2} needs both missing edges") {
    // adding only {0,1} still leaves nb(2) == nb(3), so the optimum is 2
    const auto sol = smallest_unn_extension(Graph::complete_bipartite(2, 2));
    CHECK(sol.cost == Rational(2));
    CHECK(sol.added_edges == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(sol.cost == brute_extension_cost(Graph::complete_bipartite(2, 2)));
  }
  SUBCASE("K_{1,3} resolves with one leaf-to-leaf edge") {
    const auto sol = smallest_unn_extension(Graph::star(3));
    CHECK(sol.cost == Rational(1));
    CHECK(sol.cost == brute_extension_cost(Graph::star(3)));
  }
  SUBCASE("result graph is feasible") {
    SplitMix64 rng(89);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(5));
      const Graph g = testsupport::random_graph(n, 0.4, rng);
      const auto sol = smallest_unn_extension(g);
      std::vector<Edge> edges = g.edges();
      edges.insert(edges.end(), sol.added_edges.begin(), sol.added_edges.end());
      CHECK(is_unn_naive(Graph(n, false, edges)).is_unn);
      CHECK(sol.optimal);
    }
  }
  SUBCASE("negative costs are rejected") {
    EdgeCosts costs{{{0, 1}, Rational(-1)}};
    CHECK_THROWS_AS(smallest_unn_extension(Graph::complete_bipartite(2, 2), costs),
                    std::invalid_argument);
  }
  SUBCASE("cost keys must be non-edges") {
    EdgeCosts costs{{{0, 2}, Rational(1)}};  // an existing edge of K_{2,2}
    CHECK_THROWS_AS(smallest_unn_extension(Graph::complete_bipartite(2, 2), costs),
                    std::invalid_argument);
  }
}

TEST_CASE("branch-and-bound matches the exhaustive optimum") {
  SplitMix64 rng(97);
  ExtensionOptions exh{ExtensionOptions::Method::Exhaustive, 1u << 22};
  ExtensionOptions bnb{ExtensionOptions::Method::BranchAndBound, 1u << 22};
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(5));
    const Graph g = testsupport::random_graph(n, rng.unit(), rng);
    EdgeCosts costs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v) && rng.below(2) == 0)
          costs[{u, v}] = Rational(1 + static_cast<long long>(rng.below(5)),
                                   1 + static_cast<long long>(rng.below(3)));
    const auto a = smallest_unn_extension(g, costs, exh);
    const auto b = smallest_unn_extension(g, costs, bnb);
    CHECK(a.cost == b.cost);
    CHECK(b.optimal);
    CHECK(a.cost == brute_extension_cost(g, costs));
  }
}

TEST_CASE("branch-and-bound respects its node budget") {
  ExtensionOptions tiny{ExtensionOptions::Method::BranchAndBound, 3};
  const auto sol = smallest_unn_extension(Graph::complete_bipartite(3, 3), {}, tiny);
  CHECK_FALSE(sol.optimal);
  // the fallback incumbent (all candidate edges) is still feasible
  std::vector<Edge> edges = Graph::complete_bipartite(3, 3).edges();
  edges.insert(edges.end(), sol.added_edges.begin(), sol.added_edges.end());
  CHECK(is_unn_naive(Graph(6, false, edges)).is_unn);
}
