#include "cograph/twins.h"

#include <gtest/gtest.h>

#include <random>

#include "test_support.h"

namespace cograph {
namespace {

using Edges = std::vector<std::pair<Vertex, Vertex>>;

TEST(TwinSequenceTest, K1AndK2) {
  const TwinSequence k1 = ExtractTwinSequence(Graph(1));
  EXPECT_EQ(k1.base, 1);
  EXPECT_TRUE(k1.steps.empty());

  const TwinSequence k2 = ExtractTwinSequence(Graph::Complete(2));
  EXPECT_EQ(k2.base, 1);
  ASSERT_EQ(k2.steps.size(), 1u);
  EXPECT_EQ(k2.steps[0], (TwinStep{2, 1, TwinKind::kTrueTwin}));
}

TEST(TwinSequenceTest, C4ReplaysExactly) {
  const Edges e = {{1, 3}, {1, 4}, {2, 3}, {2, 4}};
  const Graph c4(4, e);
  const TwinSequence seq = ExtractTwinSequence(c4);
  EXPECT_EQ(Replay(seq), c4);
  // Removal order under the lexicographic rule: 2 (false twin of 1), then
  // 4 (false twin of 3), then 3 (true twin of 1); additions are reversed.
  const std::vector<TwinStep> want = {{3, 1, TwinKind::kTrueTwin},
                                      {4, 3, TwinKind::kFalseTwin},
                                      {2, 1, TwinKind::kFalseTwin}};
  EXPECT_EQ(seq.steps, want);
}

TEST(TwinSequenceTest, NonCographCarriesWitness) {
  const Edges e = {{1, 2}, {2, 3}, {3, 4}};
  try {
    ExtractTwinSequence(Graph(4, e));
    FAIL() << "expected NotACograph";
  } catch (const NotACograph& err) {
    EXPECT_EQ(err.witness().quad, (P4{1, 2, 3, 4}));
  }
}

TEST(TwinSequenceTest, WitnessFromPartiallyReducedGraph) {
  // P4 on 1-2-3-4 plus a false twin 5 of vertex 1: twin elimination removes
  // 5 first, then stalls on the P4.
  const Edges e = {{1, 2}, {2, 3}, {3, 4}, {5, 2}};
  const Graph g(5, e);
  const TwinElimination elim = EliminateTwins(g);
  ASSERT_TRUE(elim.witness.has_value());
  EXPECT_TRUE(InducesP4(g, elim.witness->quad));
}

TEST(ReplayTest, RejectsMalformedSequences) {
  TwinSequence seq;
  seq.order = 2;
  seq.base = 1;
  seq.steps = {{1, 1, TwinKind::kTrueTwin}};
  EXPECT_THROW(Replay(seq), std::invalid_argument);
  seq.steps = {{3, 1, TwinKind::kTrueTwin}};
  EXPECT_THROW(Replay(seq), std::invalid_argument);
  seq.steps = {};
  EXPECT_THROW(Replay(seq), std::invalid_argument);
}

TEST(TwinSequencePropertyTest, ReplayReconstructsRandomCographs) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Graph g = CotreeToGraph(RandomCotree(1 + seed % 16, seed));
    const TwinSequence seq = ExtractTwinSequence(g);
    EXPECT_EQ(seq.base, 1);
    EXPECT_EQ(Replay(seq), g);
    EXPECT_EQ(ExtractTwinSequence(g), seq);  // deterministic
    for (const TwinStep& s : seq.steps) EXPECT_GT(s.added, s.twin_of);
  }
}

TEST(TwinSequencePropertyTest, ThresholdGraphsAreCographs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::RandomThresholdGraph(1 + testing::Below(rng, 12), rng);
    EXPECT_EQ(Replay(ExtractTwinSequence(g)), g);
  }
}

}  // namespace
}  // namespace cograph
