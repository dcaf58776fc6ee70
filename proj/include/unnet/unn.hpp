#pragma once

#include <optional>
#include <utility>

#include "unnet/graph.hpp"

namespace unnet {

/// Outcome of a unique-neighborhood check. When the property fails, witness
/// holds the lexicographically smallest pair of distinct vertices whose
/// neighborhoods coincide.
struct UnnVerdict {
  bool is_unn = false;
  std::optional<std::pair<int, int>> witness;

  bool operator==(const UnnVerdict&) const = default;
};

/// Set-based check: sorts neighbor-list fingerprints and scans for duplicates,
/// O(n * deg * log n). Undirected input only.
UnnVerdict is_unn_naive(const Graph& g);

/// Matrix-based check over exact integers. Rows i and j of a 0/1 matrix are
/// equal exactly when their squared Hamming distance
///
///   deg(i) + deg(j) - 2 * (A*A^T)(i,j)
///
/// vanishes, so the graph has pairwise-distinct neighborhoods iff that
/// distance is >= 1 for every off-diagonal entry. (The one-sided comparison of
/// (A^2)(i,j) against the row degree alone is not enough: it also triggers
/// when one neighborhood strictly contains the other, e.g. the two endpoints
/// of a path against the interior vertices two hops away.) Requires a
/// symmetric, zero-diagonal matrix.
UnnVerdict is_unn_algebraic(const AdjacencyMatrix& a);

enum class EdgeSide { Out, In };

/// Directed variant of the matrix check: rows of A are out-neighborhoods,
/// columns are in-neighborhoods, and the same distance criterion applies to
/// A*A^T resp. A^T*A. For a symmetric matrix both sides coincide with
/// is_unn_algebraic.
UnnVerdict is_unn_directed(const AdjacencyMatrix& a, EdgeSide side);

}  // namespace unnet
