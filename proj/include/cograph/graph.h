// Labeled simple undirected graphs with the union/join algebra used to build
// cographs, plus the twin and induced-P4 primitives.

#ifndef COGRAPH_GRAPH_H_
#define COGRAPH_GRAPH_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cograph {

// Vertices are 1-based: a graph on n vertices has labels 1..n.
using Vertex = int;

enum class TwinKind { kFalseTwin, kTrueTwin };

std::string_view TwinKindName(TwinKind kind);

struct TwinPair {
  Vertex u;
  Vertex v;
  TwinKind kind;

  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

using P4 = std::array<Vertex, 4>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws std::invalid_argument on self-loops or out-of-range labels.
  // Duplicate pairs are collapsed.
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  static Graph Complete(int n);
  static Graph Empty(int n) { return Graph(n); }

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;  // edge count

  bool adjacent(Vertex u, Vertex v) const;
  // Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v - 1); }

  // Edges {u, v} with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void AddEdge(Vertex u, Vertex v);

  std::vector<std::vector<Vertex>> adj_;
};

// g1 keeps labels 1..n1; g2 is shifted onto n1+1..n1+n2.
Graph UnionOf(const Graph& g1, const Graph& g2);
Graph JoinOf(const Graph& g1, const Graph& g2);
Graph ComplementOf(const Graph& g);

// Lexicographically smallest (u, v), u < v, with N(u)\{v} = N(v)\{u}.
// Requires g.order() >= 2.
std::optional<TwinPair> FindTwinPair(const Graph& g);

// Same search restricted to the induced subgraph on `alive`
// (alive[v-1] true means v is present).
std::optional<TwinPair> FindTwinPair(const Graph& g,
                                     const std::vector<bool>& alive);

// Brute force over ordered quadruples; returns (a,b,c,d) inducing exactly the
// edges ab, bc, cd.
std::optional<P4> FindInducedP4(const Graph& g);
std::optional<P4> FindInducedP4(const Graph& g, const std::vector<bool>& alive);

bool InducesP4(const Graph& g, const P4& quad);

std::string DescribeEdges(const Graph& g);

}  // namespace cograph

#endif  // COGRAPH_GRAPH_H_
