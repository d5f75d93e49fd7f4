#include "cograph/verify.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cograph {

namespace {

std::string Cell(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Checks that run after the annihilator, without recomputing it.
PredictedSpectrum MultiplicitiesUnchecked(const ExactMatrix& m) {
  PredictedSpectrum out;
  for (Eigenvalue mu : kAllEigenvalues) {
    out.at(mu) = m.dim() - ExactRank(m.Shifted(LambdaUnits(mu)));
  }
  if (out.total() != m.dim()) {
    throw AnnihilatorNotVerified("exact multiplicities sum to " +
                                 std::to_string(out.total()) + ", not " +
                                 std::to_string(m.dim()));
  }
  return out;
}

template <typename Fn>
Verdict Guarded(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return Verdict::Fail(name, e.what());
  }
}

}  // namespace

int SpectrumReport::distinct() const {
  int count = 0;
  for (Eigenvalue mu : kAllEigenvalues) count += exact.at(mu) > 0 ? 1 : 0;
  return count;
}

Verdict CheckPattern(const ExactMatrix& m, const Graph& g) {
  if (m.dim() != g.order()) {
    throw std::invalid_argument("matrix dimension " + std::to_string(m.dim()) +
                                " does not match graph order " +
                                std::to_string(g.order()));
  }
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = i + 1; j < m.dim(); ++j) {
      const bool nonzero = !m(i, j).is_zero() || !m(j, i).is_zero();
      const bool edge = g.adjacent(i + 1, j + 1);
      if (nonzero != edge) {
        return Verdict::Fail("pattern", (edge ? "zero entry at edge "
                                              : "nonzero entry at non-edge ") +
                                            Cell(i, j));
      }
    }
  }
  return Verdict::Pass("pattern");
}

Verdict CheckDiagonal(const ExactMatrix& m) {
  const ExactScalar one = 1;
  for (int i = 0; i < m.dim(); ++i) {
    if (!m(i, i).is_zero() && !(m(i, i) == one)) {
      return Verdict::Fail("diagonal", "entry " + Cell(i, i) + " = " +
                                           m(i, i).ToString());
    }
  }
  return Verdict::Pass("diagonal");
}

Verdict CheckSymmetric(const ExactMatrix& m) {
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = i + 1; j < m.dim(); ++j) {
      if (!(m(i, j) == m(j, i))) {
        return Verdict::Fail("symmetric", "asymmetric at " + Cell(i, j));
      }
    }
  }
  return Verdict::Pass("symmetric");
}

Verdict CheckAnnihilator(const ExactMatrix& m) {
  const ExactMatrix product =
      m.Shifted(-1) * m * m.Shifted(1) * m.Shifted(2);
  for (int i = 0; i < product.dim(); ++i) {
    for (int j = 0; j < product.dim(); ++j) {
      if (!product(i, j).is_zero()) {
        return Verdict::Fail("annihilator",
                             "(M+I)M(M-I)(M-2I) nonzero at " + Cell(i, j) +
                                 ": " + product(i, j).ToString());
      }
    }
  }
  return Verdict::Pass("annihilator");
}

PredictedSpectrum ExactMultiplicities(const ExactMatrix& m) {
  const Verdict annihilator = CheckAnnihilator(m);
  if (!annihilator.passed) throw AnnihilatorNotVerified(annihilator.detail);
  return MultiplicitiesUnchecked(m);
}

Verdict CheckPredicted(const PredictedSpectrum& exact,
                       const PredictedSpectrum& predicted) {
  for (Eigenvalue mu : kAllEigenvalues) {
    if (exact.at(mu) != predicted.at(mu)) {
      return Verdict::Fail(
          "predicted", "multiplicity of " + std::string(EigenvalueName(mu)) +
                           ": exact " + std::to_string(exact.at(mu)) +
                           ", predicted " + std::to_string(predicted.at(mu)));
    }
  }
  return Verdict::Pass("predicted", ToString(exact));
}

Verdict CheckPredicted(const ExactMatrix& m,
                       const PredictedSpectrum& predicted) {
  return Guarded("predicted", [&] {
    return CheckPredicted(ExactMultiplicities(m), predicted);
  });
}

Verdict CheckDspecSize(const SpectrumReport& report) {
  const int distinct = report.distinct();
  const std::string detail = std::to_string(distinct) + " distinct";
  return distinct <= 4 ? Verdict::Pass("dspec_size", detail)
                       : Verdict::Fail("dspec_size", detail);
}

Verdict CheckEigenbasis(const ExactMatrix& m,
                        const std::vector<EigenPair>& basis) {
  if (static_cast<int>(basis.size()) != m.dim()) {
    return Verdict::Fail("eigenbasis", "basis has " +
                                           std::to_string(basis.size()) +
                                           " vectors for dimension " +
                                           std::to_string(m.dim()));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ExactVector mx = m.Apply(basis[i].vector);
    const ExactScalar mu = LambdaUnits(basis[i].value);
    for (int r = 0; r < m.dim(); ++r) {
      if (!(mx[r] - mu * basis[i].vector[r]).is_zero()) {
        return Verdict::Fail("eigenbasis",
                             "residual of vector " + std::to_string(i + 1) +
                                 " nonzero at row " + std::to_string(r + 1));
      }
    }
    for (std::size_t j = i; j < basis.size(); ++j) {
      const ExactScalar dot = Dot(basis[i].vector, basis[j].vector);
      const ExactScalar want = i == j ? 1 : 0;
      if (!(dot == want)) {
        return Verdict::Fail("eigenbasis", "<x" + std::to_string(i + 1) +
                                               ",x" + std::to_string(j + 1) +
                                               "> = " + dot.ToString());
      }
    }
  }
  return Verdict::Pass("eigenbasis");
}

std::vector<double> ExpectedEigenvalues(const PredictedSpectrum& exact,
                                        double lambda) {
  std::vector<double> out;
  for (Eigenvalue mu : kAllEigenvalues) {
    out.insert(out.end(), exact.at(mu), lambda * LambdaUnits(mu));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Verdict CheckNumericAgreement(const SpectrumReport& report, double lambda,
                              double tolerance) {
  const std::vector<double> expected = ExpectedEigenvalues(report.exact, lambda);
  if (expected.size() != report.numeric.size()) {
    return Verdict::Fail("numeric", "expected " +
                                        std::to_string(expected.size()) +
                                        " eigenvalues, got " +
                                        std::to_string(report.numeric.size()));
  }
  const double bound = tolerance * std::max(1.0, std::fabs(lambda));
  double worst = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double diff = std::fabs(expected[i] - report.numeric[i]);
    worst = std::max(worst, diff);
    if (!(diff <= bound)) {
      std::ostringstream detail;
      detail.precision(17);
      detail << "eigenvalue " << i + 1 << ": numeric " << report.numeric[i]
             << " vs exact " << expected[i];
      return Verdict::Fail("numeric", detail.str());
    }
  }
  std::ostringstream detail;
  detail.precision(3);
  detail << "max deviation " << worst;
  return Verdict::Pass("numeric", detail.str());
}

void AttachNumeric(SpectrumReport& report, const ExactMatrix& m,
                   double lambda) {
  report.numeric = NumericEigenvalues(ScaleToNumeric(m, lambda));
  report.max_deviation = 0.0;
  for (double x : report.numeric) {
    double nearest = INFINITY;
    for (Eigenvalue mu : kAllEigenvalues) {
      nearest = std::min(nearest, std::fabs(x - lambda * LambdaUnits(mu)));
    }
    report.max_deviation = std::max(report.max_deviation, nearest);
  }
}

bool Certificate::all_passed() const { return first_failure() == nullptr; }

const Verdict* Certificate::first_failure() const {
  for (const auto& v : verdicts) {
    if (!v.passed) return &v;
  }
  return nullptr;
}

Certificate CertifyMatrix(const Graph& g, const ExactMatrix& m,
                          const PredictedSpectrum& predicted,
                          const CertifyOptions& options) {
  Certificate cert;
  auto& out = cert.verdicts;
  out.push_back(CheckSymmetric(m));
  out.push_back(Guarded("pattern", [&] { return CheckPattern(m, g); }));
  out.push_back(CheckDiagonal(m));
  const Verdict annihilator = CheckAnnihilator(m);
  out.push_back(annihilator);

  bool have_exact = false;
  if (annihilator.passed) {
    try {
      cert.spectrum.exact = MultiplicitiesUnchecked(m);
      have_exact = true;
    } catch (const std::exception& e) {
      out.push_back(Verdict::Fail("multiplicities", e.what()));
    }
  }
  if (have_exact) {
    out.push_back(CheckPredicted(cert.spectrum.exact, predicted));
    out.push_back(CheckDspecSize(cert.spectrum));
  } else {
    out.push_back(Verdict::Fail("predicted", "exact multiplicities unavailable"));
    out.push_back(
        Verdict::Fail("dspec_size", "exact multiplicities unavailable"));
  }

  if (options.numeric) {
    out.push_back(Guarded("numeric", [&] {
      AttachNumeric(cert.spectrum, m, options.lambda);
      if (!have_exact) {
        return Verdict::Fail("numeric", "no exact spectrum to compare against");
      }
      return CheckNumericAgreement(cert.spectrum, options.lambda);
    }));
  }
  return cert;
}

Certificate Certify(const Graph& g, const TwinSequence& seq,
                    const Synthesis& synthesis,
                    const CertifyOptions& options) {
  Certificate cert =
      CertifyMatrix(g, synthesis.matrix, synthesis.predicted, options);
  cert.verdicts.insert(cert.verdicts.begin(), Guarded("replay", [&] {
                         return Replay(seq) == g
                                    ? Verdict::Pass("replay")
                                    : Verdict::Fail("replay",
                                                    "replayed graph " +
                                                        DescribeEdges(
                                                            Replay(seq)) +
                                                        " differs from input");
                       }));
  if (options.eigenbasis) {
    cert.verdicts.push_back(Guarded("eigenbasis", [&] {
      return CheckEigenbasis(synthesis.matrix, Eigenbasis(seq));
    }));
  }
  return cert;
}

}  // namespace cograph
