#include "unnet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace unnet {

Graph::Graph(int n, bool directed, std::vector<Edge> edges)
    : n_(n), directed_(directed) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (!directed && u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  out_.assign(n_, {});
  if (directed_) in_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    out_[u].push_back(v);
    if (directed_) {
      in_[v].push_back(u);
    } else {
      out_[v].push_back(u);
    }
  }
  for (auto& a : out_) std::sort(a.begin(), a.end());
  for (auto& a : in_) std::sort(a.begin(), a.end());
}

Graph Graph::undirected(int n, std::vector<Edge> edges) {
  return Graph(n, false, std::move(edges));
}

Graph Graph::directed_graph(int n, std::vector<Edge> arcs) {
  return Graph(n, true, std::move(arcs));
}

Graph Graph::complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, false, std::move(e));
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, false, std::move(e));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("Graph::cycle: need at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, false, std::move(e));
}

Graph Graph::star(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, false, std::move(e));
}

Graph Graph::complete_bipartite(int left, int right) {
  std::vector<Edge> e;
  for (int u = 0; u < left; ++u)
    for (int v = 0; v < right; ++v) e.emplace_back(u, left + v);
  return Graph(left + right, false, std::move(e));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& a = out_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

const std::vector<int>& Graph::out_neighbors(int v) const {
  check_vertex(v);
  return out_[v];
}

const std::vector<int>& Graph::in_neighbors(int v) const {
  check_vertex(v);
  return directed_ ? in_[v] : out_[v];
}

int Graph::degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
int Graph::out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
int Graph::in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    auto visit = [&](int w) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    };
    for (int w : out_[u]) visit(w);
    if (directed_)
      for (int w : in_[u]) visit(w);
  }
  return count == n_;
}

Neighborhood neighborhood(const Graph& g, int v, NeighborSide side) {
  const auto& members =
      side == NeighborSide::Out ? g.out_neighbors(v) : g.in_neighbors(v);
  return Neighborhood{v, members};
}

AdjacencyMatrix::AdjacencyMatrix(int n, std::vector<std::uint8_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 0 || entries_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("AdjacencyMatrix: bad dimensions");
  for (int i = 0; i < n_; ++i) {
    if (at(i, i) != 0) throw std::invalid_argument("AdjacencyMatrix: nonzero diagonal");
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != 0 && at(i, j) != 1)
        throw std::invalid_argument("AdjacencyMatrix: entries must be 0/1");
  }
}

bool AdjacencyMatrix::symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::vector<int> AdjacencyMatrix::row(int i) const {
  if (i < 0 || i >= n_) throw std::invalid_argument("AdjacencyMatrix::row: out of range");
  std::vector<int> r(n_);
  for (int j = 0; j < n_; ++j) r[j] = at(i, j);
  return r;
}

AdjacencyMatrix adjacency_matrix(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [u, v] : g.edges()) {
    entries[static_cast<std::size_t>(u) * n + v] = 1;
    if (!g.is_directed()) entries[static_cast<std::size_t>(v) * n + u] = 1;
  }
  return AdjacencyMatrix(n, std::move(entries));
}

namespace {

// Strips comments and splits into whitespace tokens.
std::vector<std::string> tokenize(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int(const std::string& tok, int line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected an integer, got '" + tok + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  bool directed = false;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                    : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (n < 0) {
      if (tokens[0] != "n" || tokens.size() < 2 || tokens.size() > 3 ||
          (tokens.size() == 3 && tokens[2] != "directed"))
        throw ParseError(line_no, "expected header 'n <count> [directed]'");
      n = parse_int(tokens[1], line_no);
      if (n < 0) throw ParseError(line_no, "negative vertex count");
      directed = tokens.size() == 3;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected edge '<u> <v>'");
    const int u = parse_int(tokens[0], line_no);
    const int v = parse_int(tokens[1], line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(line_no, "endpoint out of range 0.." + std::to_string(n - 1));
    if (u == v) throw ParseError(line_no, "self-loop " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError(line_no, "missing header 'n <count>'");
  return Graph(n, directed, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count());
  if (g.is_directed()) out += " directed";
  out += '\n';
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  return out;
}

std::string to_dot(const Graph& g) {
  std::string out = g.is_directed() ? "digraph {\n" : "graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const bool isolated =
        g.out_neighbors(v).empty() && (!g.is_directed() || g.in_neighbors(v).empty());
    if (isolated) out += "  " + std::to_string(v) + ";\n";
  }
  const char* arrow = g.is_directed() ? " -> " : " -- ";
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + arrow + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace unnet
