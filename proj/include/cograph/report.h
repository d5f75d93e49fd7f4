// Run reports: everything produced for one input graph, serialized as a
// line-oriented text document. Exact entries are written as (a, b, k)
// integer triples so the matrix survives the file boundary unchanged.

#ifndef COGRAPH_REPORT_H_
#define COGRAPH_REPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "cograph/exact.h"
#include "cograph/graph.h"
#include "cograph/numeric.h"
#include "cograph/synthesis.h"
#include "cograph/twins.h"
#include "cograph/verify.h"

namespace cograph {

struct RunReport {
  std::string input;   // descriptor, e.g. "g6 C~"
  Graph graph;
  std::string cotree;  // normalized DSL
  TwinSequence sequence;
  std::vector<SynthesisCase> cases;
  PredictedSpectrum predicted;
  double lambda = 1.0;
  ExactMatrix matrix;   // lambda-units
  DenseMatrix numeric;  // scaled by lambda
  SpectrumReport spectrum;
  std::vector<Verdict> verdicts;
  double wall_ms = 0.0;

  bool all_passed() const;
};

std::string WriteReport(const RunReport& report);

// Throws FormatError (from formats.h) on malformed documents.
RunReport ParseReport(std::string_view text);

// Full-precision decimal with 17 significant digits.
std::string FormatDouble(double x);

}  // namespace cograph

#endif  // COGRAPH_REPORT_H_
