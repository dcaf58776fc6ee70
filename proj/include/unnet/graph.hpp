#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace unnet {

using Edge = std::pair<int, int>;

/// Simple graph over dense vertex ids 0..n-1.
///
/// Undirected edges are stored exactly once in canonical (min,max) order;
/// directed graphs keep ordered arcs. Self-loops and duplicates are rejected
/// or collapsed at construction time, and the object is immutable afterwards,
/// so instances can be shared read-only across worker threads.
class Graph {
 public:
  Graph() = default;
  Graph(int n, bool directed, std::vector<Edge> edges);

  static Graph undirected(int n, std::vector<Edge> edges);
  static Graph directed_graph(int n, std::vector<Edge> arcs);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int leaves);  // center 0, leaves 1..leaves
  static Graph complete_bipartite(int left, int right);

  int vertex_count() const { return n_; }
  bool is_directed() const { return directed_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const;
  const std::vector<int>& out_neighbors(int v) const;
  const std::vector<int>& in_neighbors(int v) const;
  int degree(int v) const;
  int out_degree(int v) const;
  int in_degree(int v) const;

  /// Reachability over the underlying undirected structure.
  bool connected() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;

  void check_vertex(int v) const;
};

struct Neighborhood {
  int vertex = 0;
  std::vector<int> members;  // ascending

  bool operator==(const Neighborhood&) const = default;
};

enum class NeighborSide { Out, In };

/// nb(v): the set of neighbors of v; for directed graphs the side selects
/// outgoing or incoming arcs.
Neighborhood neighborhood(const Graph& g, int v, NeighborSide side = NeighborSide::Out);

/// Dense 0/1 matrix view of a graph. Materialized on demand, never stored
/// inside Graph.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  AdjacencyMatrix(int n, std::vector<std::uint8_t> entries);

  int size() const { return n_; }
  int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  bool symmetric() const;
  std::vector<int> row(int i) const;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> entries_;
};

AdjacencyMatrix adjacency_matrix(const Graph& g);

/// Parse failure; the message names the offending 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
  int line_number;
};

/// Edge-list text format: '#' starts a comment, the first meaningful line is
/// "n <count> [directed]", every following line is "<u> <v>".
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

/// DOT export (graph/digraph). Deterministic edge order; isolated vertices
/// appear as bare node statements.
std::string to_dot(const Graph& g);

}  // namespace unnet
