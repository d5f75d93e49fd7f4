// End-to-end runs: recognition, twin sequence, synthesis and certification
// for one graph, plus the seeded fuzz harness over random cotrees.

#ifndef COGRAPH_PIPELINE_H_
#define COGRAPH_PIPELINE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "cograph/report.h"

namespace cograph {

struct PipelineOptions {
  double lambda = 1.0;
  bool numeric = true;
  bool eigenbasis = true;
};

// Throws NotACograph with the P4 witness; std::invalid_argument for
// lambda == 0.
RunReport BuildReport(const Graph& g, std::string input,
                      const PipelineOptions& options = {});

// Re-runs the matrix checks on a parsed report against `g`.
std::vector<Verdict> CheckReport(const RunReport& report, const Graph& g);

struct FuzzOptions {
  int n_max = 12;
  int trials = 1000;
  std::uint64_t seed = 0;
};

struct FuzzFailure {
  int trial;
  std::string cotree;  // DSL, replayable with --cotree
  std::string reason;
};

struct FuzzSummary {
  int trials = 0;
  int passes = 0;
  std::vector<FuzzFailure> failures;
};

// Seed and size of one trial; depends only on (options, trial).
std::uint64_t TrialSeed(std::uint64_t seed, int trial);
int TrialOrder(const FuzzOptions& options, int trial);

// Runs the whole pipeline on one cotree and returns the failed verdicts
// (empty on success).
std::vector<Verdict> RunCotreeTrial(const CoTree& tree,
                                    const PipelineOptions& options = {});

// Throws std::invalid_argument when n_max < 1 or trials < 1.
FuzzSummary RunFuzz(const FuzzOptions& options);

}  // namespace cograph

#endif  // COGRAPH_PIPELINE_H_
