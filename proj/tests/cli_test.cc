#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const std::string command =
      std::string("'") + COGRAPHEIG_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path TempFile(const std::string& name,
                               const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("cographeig_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << contents;
  return path;
}

TEST(CliTest, Recognize) {
  EXPECT_EQ(Cli("recognize --g6 C~").out, "J(1,2,3,4)\n");
  EXPECT_EQ(Cli("recognize --g6 @").out, "1\n");
  EXPECT_EQ(Cli("recognize --cotree 'J(U(2,1),3)'").out, "J(3,U(1,2))\n");
  const auto p4 = TempFile("p4.txt", "1 2\n2 3\n3 4\n");
  const CliRun r = Cli("recognize --edges '" + p4.string() + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "not a cograph; induced P4: 1,2,3,4\n");
  std::filesystem::remove(p4);
}

TEST(CliTest, InputErrors) {
  EXPECT_EQ(Cli("recognize --g6 '~~'").code, 3);
  EXPECT_EQ(Cli("recognize --cotree 'J(1,2,)'").code, 3);
  EXPECT_EQ(Cli("recognize --edges /nonexistent/graph.txt").code, 3);
  EXPECT_EQ(Cli("recognize --g6 C~ --cotree 1").code, 3);
  EXPECT_EQ(Cli("synth --cotree 'J(1,2)' --lambda 0").code, 3);
  EXPECT_EQ(Cli("bogus").code, 3);
}

TEST(CliTest, SynthWritesReportThatChecks) {
  const CliRun r = Cli("synth --cotree 'J(1,2)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cases 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("1 2 -1 0 0\n"), std::string::npos);

  const auto c4 = TempFile("c4.txt", "1 3\n1 4\n2 3\n2 4\n");
  const auto report = std::filesystem::temp_directory_path() /
                      ("cographeig_cli_" + std::to_string(::getpid()) + "_c4.report");
  const CliRun s = Cli("synth --edges '" + c4.string() + "' --lambda 3 --out '" +
                    report.string() + "'");
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("predicted minus=0 zero=1 lambda=2 two=1"),
            std::string::npos);
  EXPECT_EQ(Cli("check '" + report.string() + "'").code, 0);
  EXPECT_EQ(Cli("check '" + report.string() + "' --g6 C~").code, 1);
  std::filesystem::remove(c4);
  std::filesystem::remove(report);
}

TEST(CliTest, EigPrintsScaledSpectrum) {
  const CliRun r = Cli("eig --cotree 'J(1,2)' --lambda 2");
  EXPECT_EQ(r.code, 0);
  double lo = 0, hi = 0;
  ASSERT_EQ(std::sscanf(r.out.c_str(), "%lf %lf", &lo, &hi), 2);
  EXPECT_NEAR(lo, 0.0, 1e-12);
  EXPECT_NEAR(hi, 4.0, 1e-12);
}

TEST(CliTest, FuzzSummary) {
  const CliRun r = Cli("fuzz --n-max 10 --trials 20 --seed 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "fuzz: 20/20 passed (n_max=10, seed=0)\n");
  EXPECT_EQ(Cli("fuzz --n-max 0").code, 3);
}

}  // namespace
