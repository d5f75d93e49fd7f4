#include "cograph/graph.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cograph {

std::string_view TwinKindName(TwinKind kind) {
  return kind == TwinKind::kTrueTwin ? "true" : "false";
}

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  adj_.resize(n);
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
    : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    AddEdge(u, v);
  }
}

Graph Graph::Complete(int n) {
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u != v) g.adj_[u - 1].push_back(v);
    }
  }
  return g;
}

void Graph::AddEdge(Vertex u, Vertex v) {
  auto insert = [](std::vector<Vertex>& list, Vertex x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert(adj_[u - 1], v);
  insert(adj_[v - 1], u);
}

int Graph::size() const {
  std::size_t total = 0;
  for (const auto& list : adj_) total += list.size();
  return static_cast<int>(total / 2);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adj_.at(u - 1);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 1; u <= order(); ++u) {
    for (Vertex v : adj_[u - 1]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::connected() const {
  if (order() <= 1) return true;
  std::vector<bool> seen(order(), false);
  std::vector<Vertex> stack = {1};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[u - 1]) {
      if (!seen[w - 1]) {
        seen[w - 1] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == order();
}

namespace {

Graph Combine(const Graph& g1, const Graph& g2, bool cross) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  std::vector<std::pair<Vertex, Vertex>> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  if (cross) {
    for (Vertex u = 1; u <= n1; ++u) {
      for (Vertex v = n1 + 1; v <= n1 + n2; ++v) edges.emplace_back(u, v);
    }
  }
  return Graph(n1 + n2, edges);
}

std::vector<bool> AllAlive(const Graph& g) {
  return std::vector<bool>(g.order(), true);
}

}  // namespace

Graph UnionOf(const Graph& g1, const Graph& g2) {
  return Combine(g1, g2, false);
}

Graph JoinOf(const Graph& g1, const Graph& g2) { return Combine(g1, g2, true); }

Graph ComplementOf(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.order(), edges);
}

std::optional<TwinPair> FindTwinPair(const Graph& g) {
  if (g.order() < 2) {
    throw std::invalid_argument("FindTwinPair needs at least 2 vertices");
  }
  return FindTwinPair(g, AllAlive(g));
}

std::optional<TwinPair> FindTwinPair(const Graph& g,
                                     const std::vector<bool>& alive) {
  const int n = g.order();
  // Live neighborhoods, sorted.
  std::vector<std::vector<Vertex>> live(n);
  for (Vertex u = 1; u <= n; ++u) {
    if (!alive[u - 1]) continue;
    for (Vertex w : g.neighbors(u)) {
      if (alive[w - 1]) live[u - 1].push_back(w);
    }
  }
  auto equal_excluding = [&](Vertex u, Vertex v) {
    const auto& a = live[u - 1];
    const auto& b = live[v - 1];
    std::size_t i = 0, j = 0;
    while (true) {
      while (i < a.size() && a[i] == v) ++i;
      while (j < b.size() && b[j] == u) ++j;
      if (i == a.size() || j == b.size()) return i == a.size() && j == b.size();
      if (a[i] != b[j]) return false;
      ++i;
      ++j;
    }
  };
  for (Vertex u = 1; u <= n; ++u) {
    if (!alive[u - 1]) continue;
    for (Vertex v = u + 1; v <= n; ++v) {
      if (!alive[v - 1]) continue;
      if (equal_excluding(u, v)) {
        return TwinPair{u, v,
                        g.adjacent(u, v) ? TwinKind::kTrueTwin
                                         : TwinKind::kFalseTwin};
      }
    }
  }
  return std::nullopt;
}

bool InducesP4(const Graph& g, const P4& q) {
  for (int i = 0; i < 4; ++i) {
    if (q[i] < 1 || q[i] > g.order()) return false;
    for (int j = i + 1; j < 4; ++j) {
      if (q[i] == q[j]) return false;
      const bool want = (j == i + 1);
      if (g.adjacent(q[i], q[j]) != want) return false;
    }
  }
  return true;
}

std::optional<P4> FindInducedP4(const Graph& g) {
  return FindInducedP4(g, AllAlive(g));
}

std::optional<P4> FindInducedP4(const Graph& g,
                                const std::vector<bool>& alive) {
  const int n = g.order();
  for (Vertex a = 1; a <= n; ++a) {
    if (!alive[a - 1]) continue;
    for (Vertex b : g.neighbors(a)) {
      if (!alive[b - 1]) continue;
      for (Vertex c : g.neighbors(b)) {
        if (!alive[c - 1] || c == a || g.adjacent(a, c)) continue;
        for (Vertex d : g.neighbors(c)) {
          if (!alive[d - 1] || d == b || d == a) continue;
          if (g.adjacent(a, d) || g.adjacent(b, d)) continue;
          return P4{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

std::string DescribeEdges(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " {";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out << (first ? "" : ",") << u << "-" << v;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace cograph
