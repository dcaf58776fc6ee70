#include "unnet/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace unnet {

namespace {

// Unit-capacity flow network on the vertex-split digraph: vertex v becomes
// in(v)=2v and out(v)=2v+1 joined by one arc whose capacity is 1 for internal
// vertices and effectively unbounded for the endpoints. Each undirected edge
// {u,v} contributes out(u)->in(v) and out(v)->in(u), capacity 1 each. Arcs are
// appended in ascending target order so depth-first augmentation and path
// extraction are deterministic.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, int s, int t) : s_(s), t_(t) {
    const int n = g.vertex_count();
    adj_.resize(2 * n);
    for (int v = 0; v < n; ++v) {
      const int cap = (v == s || v == t) ? n : 1;
      add_arc(in(v), out(v), cap);
    }
    for (int v = 0; v < n; ++v)
      for (int w : g.out_neighbors(v)) add_arc(out(v), in(w), 1);
    visited_.assign(adj_.size(), 0);
  }

  // Augments one unit at a time until `limit` paths are routed or the flow is
  // maximum; returns the flow achieved.
  int augment_until(int limit) {
    while (flow_ < limit) {
      std::fill(visited_.begin(), visited_.end(), 0);
      if (!dfs(out(s_))) break;
      ++flow_;
    }
    return flow_;
  }

  // Extracts `count` vertex paths from the routed flow, consuming it.
  std::vector<std::vector<int>> decompose(int count) {
    std::vector<std::vector<int>> paths;
    for (int p = 0; p < count; ++p) {
      std::vector<int> path{s_};
      int node = out(s_);
      while (node != in(t_)) {
        bool advanced = false;
        for (Arc& a : adj_[node]) {
          if (a.forward && a.orig - a.cap > 0) {
            ++a.cap;  // consume one unit
            path.push_back(a.to / 2);
            node = a.to == in(t_) ? a.to : out(a.to / 2);
            advanced = true;
            break;
          }
        }
        if (!advanced) throw std::logic_error("flow decomposition out of arcs");
      }
      paths.push_back(std::move(path));
    }
    return paths;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int orig;
    int rev;
    bool forward;
  };

  static int in(int v) { return 2 * v; }
  static int out(int v) { return 2 * v + 1; }

  void add_arc(int from, int to, int cap) {
    adj_[from].push_back({to, cap, cap, static_cast<int>(adj_[to].size()), true});
    adj_[to].push_back({from, 0, 0, static_cast<int>(adj_[from].size()) - 1, false});
  }

  bool dfs(int u) {
    if (u == in(t_)) return true;
    visited_[u] = 1;
    for (Arc& a : adj_[u]) {
      if (a.cap > 0 && !visited_[a.to] && dfs(a.to)) {
        --a.cap;
        ++adj_[a.to][a.rev].cap;
        return true;
      }
    }
    return false;
  }

  int s_;
  int t_;
  int flow_ = 0;
  std::vector<std::vector<Arc>> adj_;
  std::vector<char> visited_;
};

void require_undirected(const Graph& g, const char* who) {
  if (g.is_directed())
    throw std::invalid_argument(std::string(who) + ": undirected graph required");
}

}  // namespace

DisjointPathsResult disjoint_paths(const Graph& g, int s, int t, int k) {
  require_undirected(g, "disjoint_paths");
  const int n = g.vertex_count();
  if (s < 0 || s >= n || t < 0 || t >= n)
    throw std::invalid_argument("disjoint_paths: endpoint out of range");
  if (s == t) throw std::invalid_argument("disjoint_paths: endpoints must differ");
  if (k < 1) throw std::invalid_argument("disjoint_paths: need k >= 1");

  SplitFlow net(g, s, t);
  const int achieved = net.augment_until(k);
  DisjointPathsResult result{k, achieved, std::nullopt};
  if (achieved >= k)
    result.path_set = PathSet{s, t, net.decompose(k)};
  return result;
}

int vertex_connectivity(const Graph& g) {
  require_undirected(g, "vertex_connectivity");
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("vertex_connectivity: need n >= 2");
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;  // complete graph

  int best = n - 1;
  for (int s = 0; s < n && best > 0; ++s) {
    for (int t = s + 1; t < n && best > 0; ++t) {
      if (g.has_edge(s, t)) continue;
      SplitFlow net(g, s, t);
      best = std::min(best, net.augment_until(best));
    }
  }
  return best;
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.vertex_count() < 2) return false;
  return vertex_connectivity(g) >= k;
}

}  // namespace unnet
