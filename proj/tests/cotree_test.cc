#include "cograph/cotree.h"

#include <gtest/gtest.h>

#include <random>
#include <variant>

#include "test_support.h"

namespace cograph {
namespace {

using Edges = std::vector<std::pair<Vertex, Vertex>>;

const CoTree& AsTree(const Recognition& r) { return std::get<CoTree>(r); }

TEST(ParseCotreeTest, Examples) {
  const CoTree k2 = ParseCotree("J(1,2)");
  EXPECT_EQ(k2.root().kind, NodeKind::kJoin);
  ASSERT_EQ(k2.root().children.size(), 2u);
  EXPECT_EQ(k2.root().children[0], CoNode::Leaf(1));
  EXPECT_EQ(k2.root().children[1], CoNode::Leaf(2));

  const CoTree p3 = ParseCotree(" J( 1 ,\n U(2, 3) ) ");
  EXPECT_EQ(p3.ToString(), "J(1,U(2,3))");
  EXPECT_EQ(p3.leaf_count(), 3);

  EXPECT_THROW(ParseCotree("U(1,1)"), DuplicateLabelError);
}

TEST(ParseCotreeTest, Errors) {
  EXPECT_THROW(ParseCotree("U(1,3)"), LabelGapError);
  EXPECT_THROW(ParseCotree("U(0,1)"), CotreeSyntaxError);
  EXPECT_THROW(ParseCotree(""), CotreeSyntaxError);
  EXPECT_THROW(ParseCotree("X(1,2)"), CotreeSyntaxError);
  EXPECT_THROW(ParseCotree("J(1,2"), CotreeSyntaxError);
  EXPECT_THROW(ParseCotree("J()"), CotreeSyntaxError);
  EXPECT_THROW(ParseCotree("J(1,2) 3"), CotreeSyntaxError);
  try {
    ParseCotree("J(1,2,)");
    FAIL() << "expected a syntax error";
  } catch (const CotreeSyntaxError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
}

TEST(CotreeToGraphTest, Examples) {
  EXPECT_EQ(CotreeToGraph(ParseCotree("J(1,2)")), Graph::Complete(2));
  EXPECT_EQ(CotreeToGraph(ParseCotree("J(U(1,2),U(3,4))")).edges(),
            (Edges{{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  const Graph g = CotreeToGraph(ParseCotree("U(J(1,2),3)"));
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edges(), (Edges{{1, 2}}));
}

TEST(NormalizeTest, Examples) {
  EXPECT_EQ(Normalize(ParseCotree("U(U(1,2),3)")).ToString(), "U(1,2,3)");
  EXPECT_EQ(Normalize(ParseCotree("J(U(J(1,2)))")).ToString(), "J(1,2)");
  EXPECT_EQ(Normalize(ParseCotree("J(U(3,4),U(2,1))")).ToString(),
            "J(U(1,2),U(3,4))");
  EXPECT_EQ(Normalize(ParseCotree("J(U(2,3),1)")).ToString(), "J(1,U(2,3))");
  EXPECT_TRUE(Normalize(ParseCotree("J(U(J(1,2)),3)")).is_normalized());
  EXPECT_FALSE(ParseCotree("U(U(1,2),3)").is_normalized());
  EXPECT_FALSE(ParseCotree("J(U(1))").is_normalized());
}

TEST(NormalizeTest, RebracketedTreesNormalizeIdentically) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + testing::Below(rng, 12);
    const CoTree base = RandomCotree(n, trial);
    const CoTree a(testing::Rebracket(base.root(), rng));
    const CoTree b(testing::Rebracket(base.root(), rng));
    ASSERT_EQ(CotreeToGraph(a), CotreeToGraph(b));
    EXPECT_EQ(Normalize(a), Normalize(b)) << a.ToString() << " vs " << b.ToString();
    EXPECT_EQ(Normalize(a), base);
    EXPECT_EQ(CotreeToGraph(Normalize(a)), CotreeToGraph(a));
    EXPECT_EQ(Normalize(Normalize(a)), Normalize(a));
  }
}

TEST(CanonicalEncodingTest, LeavesSortBeforeInternalNodes) {
  const auto leaf = CanonicalEncoding(CoNode::Leaf(9));
  const auto internal = CanonicalEncoding(ParseCotree("U(1,2)").root());
  EXPECT_LT(leaf, internal);
  // Encoding ignores child order.
  EXPECT_EQ(CanonicalEncoding(ParseCotree("U(2,1)").root()), internal);
}

TEST(GraphToCotreeTest, Examples) {
  const Edges p3_edges = {{1, 2}, {2, 3}};
  const Graph p3(3, p3_edges);
  const Recognition p3_tree = GraphToCotree(p3);
  ASSERT_TRUE(std::holds_alternative<CoTree>(p3_tree));
  EXPECT_EQ(AsTree(p3_tree).ToString(), "J(2,U(1,3))");
  EXPECT_EQ(CotreeToGraph(AsTree(p3_tree)), p3);

  const Edges p4_edges = {{1, 2}, {2, 3}, {3, 4}};
  const Recognition p4 = GraphToCotree(Graph(4, p4_edges));
  ASSERT_TRUE(std::holds_alternative<P4Witness>(p4));
  EXPECT_EQ(std::get<P4Witness>(p4).quad, (P4{1, 2, 3, 4}));

  const Edges c4_edges = {{1, 3}, {1, 4}, {2, 3}, {2, 4}};
  const Graph c4(4, c4_edges);
  const Recognition c4_tree = GraphToCotree(c4);
  ASSERT_TRUE(std::holds_alternative<CoTree>(c4_tree));
  EXPECT_EQ(AsTree(c4_tree).ToString(), "J(U(1,2),U(3,4))");
  EXPECT_EQ(CotreeToGraph(AsTree(c4_tree)), c4);

  EXPECT_EQ(AsTree(GraphToCotree(Graph(1))).ToString(), "1");
  EXPECT_EQ(AsTree(GraphToCotree(Graph::Complete(4))).ToString(), "J(1,2,3,4)");
}

TEST(ComplementCotreeTest, Examples) {
  const CoTree k2 = ParseCotree("J(1,2)");
  EXPECT_EQ(ComplementCotree(k2).ToString(), "U(1,2)");
  EXPECT_EQ(Normalize(ComplementCotree(ComplementCotree(k2))), Normalize(k2));

  const CoTree c4 = ParseCotree("J(U(1,2),U(3,4))");
  EXPECT_EQ(CotreeToGraph(ComplementCotree(c4)).edges(),
            (Edges{{1, 2}, {3, 4}}));
}

TEST(ComplementCotreeTest, MatchesGraphComplement) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const CoTree t = RandomCotree(1 + seed % 11, seed);
    EXPECT_EQ(CotreeToGraph(ComplementCotree(t)),
              ComplementOf(CotreeToGraph(t)));
  }
}

TEST(RandomCotreeTest, ExamplesAndDeterminism) {
  EXPECT_EQ(RandomCotree(1, 12345).ToString(), "1");
  const CoTree a = RandomCotree(5, 7);
  EXPECT_EQ(a, RandomCotree(5, 7));
  EXPECT_EQ(a.leaf_count(), 5);
  EXPECT_TRUE(a.is_normalized());
  EXPECT_THROW(RandomCotree(0, 1), std::invalid_argument);
}

TEST(RandomCotreeTest, AlwaysNormalized) {
  int joins = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const CoTree t = RandomCotree(10, seed);
    ASSERT_TRUE(t.is_normalized()) << t.ToString();
    EXPECT_EQ(t.leaf_count(), 10);
    joins += t.root().kind == NodeKind::kJoin;
  }
  // Root labels are drawn at random.
  EXPECT_GT(joins, 350);
  EXPECT_LT(joins, 650);
}

TEST(CotreePropertyTest, RoundTripAndConnectivity) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const CoTree t = RandomCotree(1 + seed % 14, seed * 31 + 5);
    const Graph g = CotreeToGraph(t);
    const Recognition r = GraphToCotree(g);
    ASSERT_TRUE(std::holds_alternative<CoTree>(r)) << t.ToString();
    EXPECT_EQ(AsTree(r), Normalize(t));
    if (t.leaf_count() > 1) {
      EXPECT_EQ(g.connected(), t.root().kind == NodeKind::kJoin);
    }
  }
}

TEST(CotreePropertyTest, RecognitionAgreesWithBruteForce) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + testing::Below(rng, 8);
    const double p = trial % 3 == 0 ? 0.2 : (trial % 3 == 1 ? 0.5 : 0.8);
    const Graph g = testing::RandomGraph(n, p, rng);
    const Recognition r = GraphToCotree(g);
    const bool cograph = !testing::NaiveInducedP4(g).has_value();
    ASSERT_EQ(std::holds_alternative<CoTree>(r), cograph) << DescribeEdges(g);
    if (cograph) {
      EXPECT_EQ(CotreeToGraph(AsTree(r)), g);
      EXPECT_TRUE(AsTree(r).is_normalized());
    } else {
      EXPECT_TRUE(InducesP4(g, std::get<P4Witness>(r).quad));
    }
  }
}

}  // namespace
}  // namespace cograph
