#include "cograph/pipeline.h"

#include <chrono>
#include <variant>

#include "cograph/cotree.h"

namespace cograph {

namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

RunReport BuildReport(const Graph& g, std::string input,
                      const PipelineOptions& options) {
  if (options.lambda == 0.0) {
    throw std::invalid_argument("lambda must be nonzero");
  }
  const auto start = std::chrono::steady_clock::now();

  Recognition recognition = GraphToCotree(g);
  if (auto* witness = std::get_if<P4Witness>(&recognition)) {
    throw NotACograph(*witness);
  }
  RunReport r;
  r.input = std::move(input);
  r.graph = g;
  r.cotree = std::get<CoTree>(recognition).ToString();
  r.sequence = ExtractTwinSequence(g);
  Synthesis synthesis = Synthesize(r.sequence);
  r.cases = synthesis.cases;
  r.predicted = synthesis.predicted;
  r.lambda = options.lambda;
  r.numeric = ScaleToNumeric(synthesis.matrix, options.lambda);

  CertifyOptions certify;
  certify.lambda = options.lambda;
  certify.numeric = options.numeric;
  certify.eigenbasis = options.eigenbasis;
  Certificate cert = Certify(g, r.sequence, synthesis, certify);
  r.matrix = std::move(synthesis.matrix);
  r.spectrum = std::move(cert.spectrum);
  r.verdicts = std::move(cert.verdicts);

  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

std::vector<Verdict> CheckReport(const RunReport& report, const Graph& g) {
  CertifyOptions options;
  options.lambda = report.lambda;
  Certificate cert =
      CertifyMatrix(g, report.matrix, report.predicted, options);
  return cert.verdicts;
}

std::uint64_t TrialSeed(std::uint64_t seed, int trial) {
  return SplitMix64(SplitMix64(seed) ^ static_cast<std::uint64_t>(trial));
}

int TrialOrder(const FuzzOptions& options, int trial) {
  const std::uint64_t draw = SplitMix64(TrialSeed(options.seed, trial));
  return 1 + static_cast<int>(draw % static_cast<std::uint64_t>(options.n_max));
}

std::vector<Verdict> RunCotreeTrial(const CoTree& tree,
                                    const PipelineOptions& options) {
  std::vector<Verdict> failed;
  try {
    const Graph g = CotreeToGraph(tree);
    Recognition recognition = GraphToCotree(g);
    const CoTree* recognized = std::get_if<CoTree>(&recognition);
    if (recognized == nullptr) {
      failed.push_back(Verdict::Fail(
          "recognition",
          "witness " + ToString(std::get<P4Witness>(recognition))));
    } else if (!(*recognized == Normalize(tree))) {
      failed.push_back(Verdict::Fail(
          "recognition", "recognized " + recognized->ToString()));
    }
    RunReport r = BuildReport(g, "cotree " + tree.ToString(), options);
    for (const Verdict& v : r.verdicts) {
      if (!v.passed) failed.push_back(v);
    }
  } catch (const std::exception& e) {
    failed.push_back(Verdict::Fail("pipeline", e.what()));
  }
  return failed;
}

FuzzSummary RunFuzz(const FuzzOptions& options) {
  if (options.n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
  FuzzSummary summary;
  summary.trials = options.trials;
  for (int t = 0; t < options.trials; ++t) {
    const CoTree tree =
        RandomCotree(TrialOrder(options, t), TrialSeed(options.seed, t));
    std::vector<Verdict> failed = RunCotreeTrial(tree);
    if (failed.empty()) {
      ++summary.passes;
    } else {
      summary.failures.push_back(
          {t, tree.ToString(), failed.front().check + ": " +
                                   failed.front().detail});
    }
  }
  return summary;
}

}  // namespace cograph
