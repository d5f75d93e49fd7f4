#include "cograph/twins.h"

#include <algorithm>
#include <sstream>

namespace cograph {

TwinElimination EliminateTwins(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("EliminateTwins needs n >= 1");

  std::vector<bool> alive(n, true);
  std::vector<TwinStep> removed;  // in removal order
  for (int remaining = n; remaining > 1; --remaining) {
    std::optional<TwinPair> twins = FindTwinPair(g, alive);
    if (!twins) {
      std::optional<P4> quad = FindInducedP4(g, alive);
      if (!quad) {
        // A twin-free graph on >= 2 vertices always has an induced P4.
        throw std::logic_error("twin-free remainder without an induced P4");
      }
      return TwinElimination{{}, P4Witness{*quad}};
    }
    alive[twins->v - 1] = false;
    removed.push_back(TwinStep{twins->v, twins->u, twins->kind});
  }

  TwinSequence seq;
  seq.order = n;
  seq.base = static_cast<Vertex>(
      std::find(alive.begin(), alive.end(), true) - alive.begin() + 1);
  seq.steps.assign(removed.rbegin(), removed.rend());
  return TwinElimination{std::move(seq), std::nullopt};
}

TwinSequence ExtractTwinSequence(const Graph& g) {
  TwinElimination elim = EliminateTwins(g);
  if (elim.witness) throw NotACograph(*elim.witness);
  return std::move(elim.sequence);
}

Graph Replay(const TwinSequence& seq) {
  const int n = seq.order;
  auto in_range = [n](Vertex v) { return v >= 1 && v <= n; };
  if (!in_range(seq.base)) {
    throw std::invalid_argument("twin sequence base out of range");
  }
  if (static_cast<int>(seq.steps.size()) != n - 1) {
    throw std::invalid_argument("twin sequence needs exactly n-1 steps");
  }
  std::vector<bool> present(n, false);
  present[seq.base - 1] = true;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const TwinStep& step : seq.steps) {
    if (!in_range(step.added) || !in_range(step.twin_of)) {
      throw std::invalid_argument("twin step vertex out of range");
    }
    if (present[step.added - 1] || !present[step.twin_of - 1]) {
      throw std::invalid_argument("twin step adds " +
                                  std::to_string(step.added) + " next to " +
                                  std::to_string(step.twin_of) +
                                  " in an invalid state");
    }
    const int a = step.added - 1;
    const int t = step.twin_of - 1;
    for (int w = 0; w < n; ++w) {
      if (present[w] && adj[t][w]) adj[a][w] = adj[w][a] = true;
    }
    if (step.kind == TwinKind::kTrueTwin) adj[a][t] = adj[t][a] = true;
    present[a] = true;
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[u][v]) edges.emplace_back(u + 1, v + 1);
    }
  }
  return Graph(n, edges);
}

std::string ToString(const TwinSequence& seq) {
  std::ostringstream out;
  out << "base " << seq.base;
  for (const TwinStep& s : seq.steps) {
    out << "; " << s.added << (s.kind == TwinKind::kTrueTwin ? " ~ " : " | ")
        << s.twin_of;
  }
  return out.str();
}

}  // namespace cograph
