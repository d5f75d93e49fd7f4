// Cotrees: rooted trees whose leaves are vertices and whose internal nodes are
// unions or joins. Includes the text DSL, canonical normalization, and
// recognition of cographs by iterated twin elimination.

#ifndef COGRAPH_COTREE_H_
#define COGRAPH_COTREE_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cograph/graph.h"

namespace cograph {

enum class NodeKind { kLeaf, kUnion, kJoin };

struct CoNode {
  NodeKind kind = NodeKind::kLeaf;
  Vertex label = 0;  // leaves only
  std::vector<CoNode> children;

  static CoNode Leaf(Vertex v) { return CoNode{NodeKind::kLeaf, v, {}}; }
  static CoNode Internal(NodeKind kind, std::vector<CoNode> children) {
    return CoNode{kind, 0, std::move(children)};
  }

  bool is_leaf() const { return kind == NodeKind::kLeaf; }

  friend bool operator==(const CoNode&, const CoNode&) = default;
};

// A well-formed cotree: leaf labels are exactly 1..n, each once, and every
// internal node has at least one child.
class CoTree {
 public:
  // Throws CotreeError when the leaves are not a permutation of 1..n.
  explicit CoTree(CoNode root);

  const CoNode& root() const { return root_; }
  int leaf_count() const { return leaf_count_; }

  // Every internal node has >= 2 children and a label unlike its parent's.
  bool is_normalized() const;

  std::string ToString() const;

  friend bool operator==(const CoTree&, const CoTree&) = default;

 private:
  CoNode root_;
  int leaf_count_ = 0;
};

class CotreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CotreeSyntaxError : public CotreeError {
 public:
  CotreeSyntaxError(const std::string& what, std::size_t offset)
      : CotreeError(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class DuplicateLabelError : public CotreeError {
 public:
  using CotreeError::CotreeError;
};

class LabelGapError : public CotreeError {
 public:
  using CotreeError::CotreeError;
};

// Expr := LEAF | ("U"|"J") "(" Expr ("," Expr)* ")"; whitespace ignored.
CoTree ParseCotree(std::string_view text);

Graph CotreeToGraph(const CoTree& tree);

// Splices single-child nodes, flattens same-label chains, and sorts children
// by their canonical encoding.
CoTree Normalize(const CoTree& tree);

CoTree ComplementCotree(const CoTree& tree);

// Canonical token encoding used for child ordering. Exposed for tests.
std::vector<std::int64_t> CanonicalEncoding(const CoNode& node);

struct P4Witness {
  P4 quad;
  friend bool operator==(const P4Witness&, const P4Witness&) = default;
};

std::string ToString(const P4Witness& witness);

using Recognition = std::variant<CoTree, P4Witness>;

// Normalized cotree if g is a cograph, otherwise an induced P4.
Recognition GraphToCotree(const Graph& g);

// Deterministic in (n, seed); always normalized. Throws on n < 1.
CoTree RandomCotree(int n, std::uint64_t seed);

}  // namespace cograph

#endif  // COGRAPH_COTREE_H_
