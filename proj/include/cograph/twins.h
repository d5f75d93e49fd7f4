// Twin-addition sequences: every cograph is reachable from K1 by repeatedly
// adding a false or true twin of an existing vertex.

#ifndef COGRAPH_TWINS_H_
#define COGRAPH_TWINS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cograph/cotree.h"
#include "cograph/graph.h"

namespace cograph {

struct TwinStep {
  Vertex added;
  Vertex twin_of;
  TwinKind kind;

  friend bool operator==(const TwinStep&, const TwinStep&) = default;
};

struct TwinSequence {
  int order = 1;  // vertex count of the reconstructed graph
  Vertex base = 1;
  std::vector<TwinStep> steps;

  friend bool operator==(const TwinSequence&, const TwinSequence&) = default;
};

class NotACograph : public std::runtime_error {
 public:
  explicit NotACograph(P4Witness witness)
      : std::runtime_error("not a cograph: induced P4 " + ToString(witness)),
        witness_(witness) {}
  const P4Witness& witness() const { return witness_; }

 private:
  P4Witness witness_;
};

// Result of iterated twin elimination: either the full sequence, or the
// twin-free remainder's induced P4.
struct TwinElimination {
  TwinSequence sequence;  // valid only when !witness
  std::optional<P4Witness> witness;
};

// Repeatedly removes the larger vertex of the lexicographically first twin
// pair. Never throws for n >= 1.
TwinElimination EliminateTwins(const Graph& g);

// Throws NotACograph when g contains an induced P4.
TwinSequence ExtractTwinSequence(const Graph& g);

// Rebuilds the graph by replaying the steps from the base vertex. Throws
// std::invalid_argument on malformed sequences (unknown or repeated vertex).
Graph Replay(const TwinSequence& seq);

std::string ToString(const TwinSequence& seq);

}  // namespace cograph

#endif  // COGRAPH_TWINS_H_
