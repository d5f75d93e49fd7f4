#include "cograph/cotree.h"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <random>
#include <span>

#include "cograph/twins.h"

namespace cograph {

namespace {

constexpr std::int64_t kCloseToken = 0;
constexpr std::int64_t kUnionToken = std::int64_t{1} << 40;
constexpr std::int64_t kJoinToken = kUnionToken + 1;

void CollectLeaves(const CoNode& node, std::vector<Vertex>& out) {
  if (node.is_leaf()) {
    out.push_back(node.label);
    return;
  }
  for (const auto& child : node.children) CollectLeaves(child, out);
}

bool NormalizedBelow(const CoNode& node, NodeKind parent) {
  if (node.is_leaf()) return true;
  if (node.children.size() < 2 || node.kind == parent) return false;
  return std::all_of(
      node.children.begin(), node.children.end(),
      [&](const CoNode& c) { return NormalizedBelow(c, node.kind); });
}

void Render(const CoNode& node, std::string& out) {
  if (node.is_leaf()) {
    out += std::to_string(node.label);
    return;
  }
  out += node.kind == NodeKind::kUnion ? "U(" : "J(";
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i > 0) out += ',';
    Render(node.children[i], out);
  }
  out += ')';
}

void AppendEncoding(const CoNode& node, std::vector<std::int64_t>& out) {
  if (node.is_leaf()) {
    out.push_back(node.label);
    return;
  }
  out.push_back(node.kind == NodeKind::kUnion ? kUnionToken : kJoinToken);
  // Children of a normalized node are already in canonical order; sorting
  // here keeps the encoding order-independent for arbitrary trees.
  std::vector<std::vector<std::int64_t>> encoded;
  encoded.reserve(node.children.size());
  for (const auto& child : node.children) {
    encoded.push_back(CanonicalEncoding(child));
  }
  std::sort(encoded.begin(), encoded.end());
  for (const auto& e : encoded) out.insert(out.end(), e.begin(), e.end());
  out.push_back(kCloseToken);
}

CoNode NormalizeNode(const CoNode& node) {
  if (node.is_leaf()) return node;
  std::vector<CoNode> flat;
  for (const auto& child : node.children) {
    CoNode normalized = NormalizeNode(child);
    if (normalized.kind == node.kind) {
      for (auto& grandchild : normalized.children) {
        flat.push_back(std::move(grandchild));
      }
    } else {
      flat.push_back(std::move(normalized));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());

  std::vector<std::pair<std::vector<std::int64_t>, CoNode>> keyed;
  keyed.reserve(flat.size());
  for (auto& c : flat) keyed.emplace_back(CanonicalEncoding(c), std::move(c));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<CoNode> sorted;
  sorted.reserve(keyed.size());
  for (auto& [key, c] : keyed) sorted.push_back(std::move(c));
  return CoNode::Internal(node.kind, std::move(sorted));
}

CoNode SwapLabels(const CoNode& node) {
  if (node.is_leaf()) return node;
  std::vector<CoNode> children;
  children.reserve(node.children.size());
  for (const auto& c : node.children) children.push_back(SwapLabels(c));
  return CoNode::Internal(
      node.kind == NodeKind::kUnion ? NodeKind::kJoin : NodeKind::kUnion,
      std::move(children));
}

// Returns the leaves below `node`, adding join edges along the way.
std::vector<Vertex> EmitEdges(const CoNode& node,
                              std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (node.is_leaf()) return {node.label};
  std::vector<Vertex> all;
  for (const auto& child : node.children) {
    std::vector<Vertex> below = EmitEdges(child, edges);
    if (node.kind == NodeKind::kJoin) {
      for (Vertex u : all) {
        for (Vertex v : below) edges.emplace_back(u, v);
      }
    }
    all.insert(all.end(), below.begin(), below.end());
  }
  return all;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CoNode ParseAll() {
    CoNode node = ParseExpr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected trailing input");
    return node;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw CotreeSyntaxError(what, pos_);
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void Expect(char c) {
    SkipSpace();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      Fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  CoNode ParseExpr() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'U' || c == 'J') {
      ++pos_;
      Expect('(');
      std::vector<CoNode> children;
      children.push_back(ParseExpr());
      while (true) {
        SkipSpace();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          children.push_back(ParseExpr());
          continue;
        }
        break;
      }
      Expect(')');
      return CoNode::Internal(c == 'U' ? NodeKind::kUnion : NodeKind::kJoin,
                              std::move(children));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::int64_t value = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > std::numeric_limits<Vertex>::max()) {
          pos_ = start;
          Fail("leaf label too large");
        }
        ++pos_;
      }
      if (value == 0) {
        pos_ = start;
        Fail("leaf labels must be positive");
      }
      return CoNode::Leaf(static_cast<Vertex>(value));
    }
    Fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Bounded draw in [0, bound). Slightly biased for huge bounds, which is
// irrelevant here; kept explicit so output does not depend on the standard
// library's distribution implementation.
std::uint64_t Draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

CoNode RandomNode(std::span<const Vertex> labels, NodeKind kind,
                  std::mt19937_64& rng) {
  if (labels.size() == 1) return CoNode::Leaf(labels.front());
  const std::size_t size = labels.size();
  const std::size_t max_blocks = std::min<std::size_t>(size, 4);
  const std::size_t blocks = 2 + Draw(rng, max_blocks - 1);

  // Choose blocks-1 distinct cut positions from 1..size-1.
  std::vector<std::size_t> cuts(size - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  for (std::size_t i = 0; i + 1 < blocks; ++i) {
    std::swap(cuts[i], cuts[i + Draw(rng, cuts.size() - i)]);
  }
  cuts.resize(blocks - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(size);

  const NodeKind child_kind =
      kind == NodeKind::kUnion ? NodeKind::kJoin : NodeKind::kUnion;
  std::vector<CoNode> children;
  std::size_t begin = 0;
  for (std::size_t end : cuts) {
    children.push_back(
        RandomNode(labels.subspan(begin, end - begin), child_kind, rng));
    begin = end;
  }
  return CoNode::Internal(kind, std::move(children));
}

bool ReplaceLeaf(CoNode& node, Vertex target, const CoNode& replacement) {
  if (node.is_leaf()) {
    if (node.label != target) return false;
    node = replacement;
    return true;
  }
  for (auto& child : node.children) {
    if (ReplaceLeaf(child, target, replacement)) return true;
  }
  return false;
}

}  // namespace

CoTree::CoTree(CoNode root) : root_(std::move(root)) {
  std::vector<Vertex> leaves;
  CollectLeaves(root_, leaves);
  std::vector<Vertex> sorted = leaves;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      throw DuplicateLabelError("duplicate leaf label " +
                                std::to_string(sorted[i]));
    }
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<Vertex>(i + 1)) {
      throw LabelGapError("leaf labels must be 1.." +
                          std::to_string(sorted.size()) + "; missing " +
                          std::to_string(i + 1));
    }
  }
  // Internal nodes need children.
  std::vector<const CoNode*> stack = {&root_};
  while (!stack.empty()) {
    const CoNode* node = stack.back();
    stack.pop_back();
    if (!node->is_leaf() && node->children.empty()) {
      throw CotreeError("internal node without children");
    }
    for (const auto& c : node->children) stack.push_back(&c);
  }
  leaf_count_ = static_cast<int>(leaves.size());
}

bool CoTree::is_normalized() const {
  if (root_.is_leaf()) return true;
  return NormalizedBelow(root_, NodeKind::kLeaf);
}

std::string CoTree::ToString() const {
  std::string out;
  Render(root_, out);
  return out;
}

std::vector<std::int64_t> CanonicalEncoding(const CoNode& node) {
  std::vector<std::int64_t> out;
  AppendEncoding(node, out);
  return out;
}

CoTree ParseCotree(std::string_view text) {
  return CoTree(Parser(text).ParseAll());
}

Graph CotreeToGraph(const CoTree& tree) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  EmitEdges(tree.root(), edges);
  return Graph(tree.leaf_count(), edges);
}

CoTree Normalize(const CoTree& tree) {
  return CoTree(NormalizeNode(tree.root()));
}

CoTree ComplementCotree(const CoTree& tree) {
  return CoTree(SwapLabels(tree.root()));
}

std::string ToString(const P4Witness& witness) {
  const auto& q = witness.quad;
  return std::to_string(q[0]) + "," + std::to_string(q[1]) + "," +
         std::to_string(q[2]) + "," + std::to_string(q[3]);
}

Recognition GraphToCotree(const Graph& g) {
  if (g.order() < 1) {
    throw std::invalid_argument("GraphToCotree needs at least one vertex");
  }
  TwinElimination elim = EliminateTwins(g);
  if (elim.witness) return *elim.witness;

  CoNode root = CoNode::Leaf(elim.sequence.base);
  for (const TwinStep& step : elim.sequence.steps) {
    const NodeKind kind = step.kind == TwinKind::kTrueTwin ? NodeKind::kJoin
                                                           : NodeKind::kUnion;
    CoNode pair = CoNode::Internal(
        kind, {CoNode::Leaf(step.twin_of), CoNode::Leaf(step.added)});
    ReplaceLeaf(root, step.twin_of, pair);
  }
  return Normalize(CoTree(std::move(root)));
}

CoTree RandomCotree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("RandomCotree needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  for (std::size_t i = labels.size(); i > 1; --i) {
    std::swap(labels[i - 1], labels[Draw(rng, i)]);
  }
  const NodeKind root_kind =
      Draw(rng, 2) == 0 ? NodeKind::kUnion : NodeKind::kJoin;
  return Normalize(CoTree(RandomNode(labels, root_kind, rng)));
}

}  // namespace cograph
