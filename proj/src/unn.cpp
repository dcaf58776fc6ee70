#include "unnet/unn.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace unnet {

UnnVerdict is_unn_naive(const Graph& g) {
  if (g.is_directed())
    throw std::invalid_argument("is_unn_naive: directed graph, use is_unn_directed");
  const int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& na = g.out_neighbors(a);
    const auto& nb = g.out_neighbors(b);
    if (na != nb) return na < nb;
    return a < b;
  });

  // Equal fingerprints are adjacent after sorting; ties within a run are in
  // ascending id order, so the first two ids of a run form that run's best
  // candidate pair.
  std::optional<std::pair<int, int>> witness;
  for (int i = 0; i + 1 < n;) {
    int j = i + 1;
    while (j < n && g.out_neighbors(order[j]) == g.out_neighbors(order[i])) ++j;
    if (j - i >= 2) {
      const std::pair<int, int> cand{order[i], order[i + 1]};
      if (!witness || cand < *witness) witness = cand;
    }
    i = j;
  }
  return UnnVerdict{!witness.has_value(), witness};
}

namespace {

enum class RowMode { Rows, Columns };

// Scans squared Hamming distances between all row (or column) pairs of a 0/1
// matrix; returns the first vanishing off-diagonal pair in row-major order,
// which is the lexicographically smallest one.
UnnVerdict distinctness_verdict(const AdjacencyMatrix& a, RowMode mode) {
  const int n = a.size();
  auto entry = [&](int i, int k) {
    return mode == RowMode::Rows ? a.at(i, k) : a.at(k, i);
  };
  std::vector<std::int64_t> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) deg[i] += entry(i, k);

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::int64_t dot = 0;
      for (int k = 0; k < n; ++k) dot += static_cast<std::int64_t>(entry(i, k)) * entry(j, k);
      if (deg[i] + deg[j] - 2 * dot <= 0) return UnnVerdict{false, std::pair{i, j}};
    }
  }
  return UnnVerdict{true, std::nullopt};
}

}  // namespace

UnnVerdict is_unn_algebraic(const AdjacencyMatrix& a) {
  if (!a.symmetric())
    throw std::invalid_argument("is_unn_algebraic: matrix must be symmetric");
  return distinctness_verdict(a, RowMode::Rows);
}

UnnVerdict is_unn_directed(const AdjacencyMatrix& a, EdgeSide side) {
  return distinctness_verdict(a, side == EdgeSide::Out ? RowMode::Rows : RowMode::Columns);
}

}  // namespace unnet
