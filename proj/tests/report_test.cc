#include "cograph/report.h"

#include <gtest/gtest.h>

#include "cograph/formats.h"
#include "cograph/pipeline.h"

namespace cograph {
namespace {

using Edges = std::vector<std::pair<Vertex, Vertex>>;

std::string WithoutWallTime(const std::string& text) {
  const auto pos = text.find("wall-time-ms ");
  return text.substr(0, pos);
}

TEST(FormatDoubleTest, Examples) {
  EXPECT_EQ(FormatDouble(-0.0), "0");
  EXPECT_EQ(FormatDouble(2.5), "2.5");
  EXPECT_EQ(FormatDouble(-0.7071067811865476), "-0.70710678118654757");
}

TEST(ReportTest, C4RoundTrip) {
  const Edges e = {{1, 3}, {1, 4}, {2, 3}, {2, 4}};
  const Graph g(4, e);
  PipelineOptions opts;
  opts.lambda = 3.0;
  const RunReport r = BuildReport(g, "edges c4.txt", opts);
  ASSERT_TRUE(r.all_passed());
  const std::string text = WriteReport(r);
  EXPECT_NE(text.find("cotree J(U(1,2),U(3,4))\n"), std::string::npos);
  EXPECT_NE(text.find("1 3 -1 0 1\n"), std::string::npos);
  EXPECT_NE(text.find("1 3 -1.5\n"), std::string::npos);

  const RunReport back = ParseReport(text);
  EXPECT_EQ(back.graph, g);
  EXPECT_EQ(back.matrix, r.matrix);
  EXPECT_EQ(back.numeric, r.numeric);
  EXPECT_EQ(back.predicted, r.predicted);
  EXPECT_EQ(back.sequence, r.sequence);
  EXPECT_EQ(back.cases, r.cases);
  EXPECT_EQ(back.spectrum.numeric, r.spectrum.numeric);
  EXPECT_EQ(back.verdicts, r.verdicts);
  EXPECT_EQ(back.lambda, 3.0);
  EXPECT_EQ(back.input, "edges c4.txt");
  EXPECT_EQ(WithoutWallTime(WriteReport(back)), WithoutWallTime(text));
}

TEST(ReportTest, RejectsMalformedDocuments) {
  EXPECT_THROW(ParseReport(""), FormatError);
  EXPECT_THROW(ParseReport("not a report\n"), FormatError);
  EXPECT_THROW(ParseReport("cograph-report 1\n"), FormatError);
  // (2, 0, 1) is 1 written non-canonically.
  EXPECT_THROW(ParseReport("cograph-report 1\norder 1\n[exact-entries]\n"
                           "1 1 2 0 1\n"),
               FormatError);
  EXPECT_THROW(ParseReport("cograph-report 1\norder 1\n[exact-entries]\n"
                           "1 2 1 0 0\n"),
               FormatError);
  EXPECT_THROW(ParseReport("cograph-report 1\norder 2\nedges 1-3\n"),
               FormatError);
}

TEST(ReportPropertyTest, DeterministicAndLossless) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = CotreeToGraph(RandomCotree(1 + seed % 14, seed + 500));
    PipelineOptions opts;
    opts.lambda = seed % 2 ? -3.0 : 2.5;
    const std::string a = WriteReport(BuildReport(g, "seed", opts));
    const std::string b = WriteReport(BuildReport(g, "seed", opts));
    EXPECT_EQ(WithoutWallTime(a), WithoutWallTime(b));
    const RunReport back = ParseReport(a);
    EXPECT_EQ(WithoutWallTime(WriteReport(back)), WithoutWallTime(a));
    for (const Verdict& v : CheckReport(back, g)) EXPECT_TRUE(v.passed) << v.check;
  }
}

}  // namespace
}  // namespace cograph
