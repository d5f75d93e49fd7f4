// cographeig: recognize cographs, synthesize matrices with at most four
// distinct eigenvalues, and certify them.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "cograph/cotree.h"
#include "cograph/formats.h"
#include "cograph/pipeline.h"
#include "cograph/report.h"

namespace {

using namespace cograph;

enum ExitCode {
  kOk = 0,
  kVerificationFailed = 1,
  kNotACograph = 2,
  kInputError = 3,
};

struct GraphSource {
  std::string g6;
  std::string edges_path;
  std::string cotree;

  void Register(CLI::App* app) {
    auto* g6_opt = app->add_option("--g6", g6, "graph6 string (n <= 62)");
    auto* edges_opt =
        app->add_option("--edges", edges_path, "edge-list file (\"u v\" lines)");
    auto* cotree_opt = app->add_option("--cotree", cotree, "cotree DSL");
    g6_opt->excludes(edges_opt)->excludes(cotree_opt);
    edges_opt->excludes(cotree_opt);
  }

  bool given() const {
    return !g6.empty() || !edges_path.empty() || !cotree.empty();
  }

  std::string Descriptor() const {
    if (!g6.empty()) return "g6 " + g6;
    if (!edges_path.empty()) return "edges " + edges_path;
    return "cotree " + cotree;
  }

  Graph Load() const {
    if (!g6.empty()) {
      std::string trimmed = g6;
      while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(
                                     trimmed.back()))) {
        trimmed.pop_back();
      }
      return ParseGraph6(trimmed);
    }
    if (!edges_path.empty()) return ParseEdgeList(ReadFile(edges_path));
    if (!cotree.empty()) return CotreeToGraph(ParseCotree(cotree));
    throw FormatError("no input: pass one of --g6, --edges, --cotree");
  }

  static std::string ReadFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
};

int Fail(int code, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return code;
}

void PrintVerdicts(const std::vector<Verdict>& verdicts, std::ostream& out) {
  for (const Verdict& v : verdicts) {
    out << (v.passed ? "  pass " : "  FAIL ") << v.check;
    if (!v.detail.empty()) out << "  " << v.detail;
    out << "\n";
  }
}

bool AllPassed(const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts) {
    if (!v.passed) return false;
  }
  return !verdicts.empty();
}

int RunRecognize(const GraphSource& source) {
  const Graph g = source.Load();
  Recognition result = GraphToCotree(g);
  if (const auto* tree = std::get_if<CoTree>(&result)) {
    std::cout << tree->ToString() << "\n";
    return kOk;
  }
  std::cout << "not a cograph; induced P4: "
            << ToString(std::get<P4Witness>(result)) << "\n";
  return kNotACograph;
}

int RunSynth(const GraphSource& source, double lambda, const std::string& out) {
  const Graph g = source.Load();
  PipelineOptions options;
  options.lambda = lambda;
  const RunReport report = BuildReport(g, source.Descriptor(), options);
  const std::string text = WriteReport(report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) return Fail(kInputError, "cannot write " + out);
    file << text;
    std::cout << "cotree " << report.cotree << "\n";
    std::cout << "predicted " << ToString(report.predicted) << "\n";
    PrintVerdicts(report.verdicts, std::cout);
    std::cout << "report written to " << out << "\n";
  }
  return report.all_passed() ? kOk : kVerificationFailed;
}

int RunCheck(const GraphSource& source, const std::string& report_path) {
  const RunReport report = ParseReport(GraphSource::ReadFile(report_path));
  const Graph g = source.given() ? source.Load() : report.graph;
  const std::vector<Verdict> verdicts = CheckReport(report, g);
  PrintVerdicts(verdicts, std::cout);
  return AllPassed(verdicts) ? kOk : kVerificationFailed;
}

int RunEig(const GraphSource& source, double lambda) {
  const Graph g = source.Load();
  const TwinSequence seq = ExtractTwinSequence(g);
  const Synthesis synthesis = Synthesize(seq);
  for (double x : NumericEigenvalues(ScaleToNumeric(synthesis.matrix, lambda))) {
    std::cout << FormatDouble(x) << "\n";
  }
  return kOk;
}

int RunFuzzCommand(const FuzzOptions& options) {
  const FuzzSummary summary = RunFuzz(options);
  for (const FuzzFailure& f : summary.failures) {
    std::cout << "FAIL trial " << f.trial << ": --cotree '" << f.cotree
              << "' (" << f.reason << ")\n";
  }
  std::cout << "fuzz: " << summary.passes << "/" << summary.trials
            << " passed (n_max=" << options.n_max << ", seed=" << options.seed
            << ")\n";
  return summary.failures.empty() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cograph recognition and four-eigenvalue matrix synthesis"};
  app.require_subcommand(1);

  GraphSource source;
  double lambda = 1.0;
  std::string out;
  std::string report_path;
  FuzzOptions fuzz;

  auto* recognize = app.add_subcommand(
      "recognize", "print the normalized cotree, or an induced P4");
  source.Register(recognize);

  GraphSource synth_source;
  auto* synth = app.add_subcommand(
      "synth", "synthesize and certify a matrix, writing a run report");
  synth_source.Register(synth);
  synth->add_option("--lambda", lambda, "nonzero scale (default 1)");
  synth->add_option("--out", out, "report path (default stdout)");

  GraphSource check_source;
  auto* check =
      app.add_subcommand("check", "re-verify a report file against its graph");
  check_source.Register(check);
  check->add_option("report", report_path, "report file")->required();

  GraphSource eig_source;
  auto* eig = app.add_subcommand("eig", "numeric spectrum of the synthesized matrix");
  eig_source.Register(eig);
  eig->add_option("--lambda", lambda, "nonzero scale (default 1)");

  auto* fuzz_cmd = app.add_subcommand(
      "fuzz", "random cotrees through the full pipeline");
  fuzz_cmd->add_option("--n-max", fuzz.n_max, "largest vertex count")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--trials", fuzz.trials, "number of trials")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--seed", fuzz.seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*recognize) return RunRecognize(source);
    if (*synth || *eig) {
      if (lambda == 0.0) return Fail(kInputError, "lambda must be nonzero");
    }
    if (*synth) return RunSynth(synth_source, lambda, out);
    if (*check) return RunCheck(check_source, report_path);
    if (*eig) return RunEig(eig_source, lambda);
    if (*fuzz_cmd) return RunFuzzCommand(fuzz);
  } catch (const NotACograph& e) {
    std::cout << "not a cograph; induced P4: " << ToString(e.witness()) << "\n";
    return kNotACograph;
  } catch (const FormatError& e) {
    return Fail(kInputError, e.what());
  } catch (const CotreeError& e) {
    return Fail(kInputError, e.what());
  } catch (const std::invalid_argument& e) {
    return Fail(kInputError, e.what());
  } catch (const std::exception& e) {
    return Fail(kVerificationFailed, e.what());
  }
  return kInputError;
}
