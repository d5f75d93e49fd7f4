// Exact and floating-point certification of synthesized matrices.

#ifndef COGRAPH_VERIFY_H_
#define COGRAPH_VERIFY_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "cograph/exact.h"
#include "cograph/graph.h"
#include "cograph/numeric.h"
#include "cograph/synthesis.h"

namespace cograph {

struct Verdict {
  std::string check;
  bool passed = false;
  std::string detail;  // first counterexample when failed

  static Verdict Pass(std::string check, std::string detail = "") {
    return {std::move(check), true, std::move(detail)};
  }
  static Verdict Fail(std::string check, std::string detail) {
    return {std::move(check), false, std::move(detail)};
  }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct SpectrumReport {
  // Exact multiplicities in lambda-units, indexed like kAllEigenvalues.
  PredictedSpectrum exact;
  std::vector<double> numeric;  // sorted; empty when not computed
  double max_deviation = 0.0;   // numeric vs nearest of {-l, 0, l, 2l}

  int distinct() const;
};

class AnnihilatorNotVerified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Off-diagonal support of m equals the edge set of g. Throws
// std::invalid_argument on dimension mismatch.
Verdict CheckPattern(const ExactMatrix& m, const Graph& g);

// Every diagonal entry is 0 or lambda.
Verdict CheckDiagonal(const ExactMatrix& m);

Verdict CheckSymmetric(const ExactMatrix& m);

// (M + I) M (M - I) (M - 2I) == 0 in lambda-units.
Verdict CheckAnnihilator(const ExactMatrix& m);

// n - rank(M - mu I) for mu in {-1, 0, 1, 2}. Verifies the annihilator first
// and throws AnnihilatorNotVerified when it fails, or when the
// multiplicities do not sum to n.
PredictedSpectrum ExactMultiplicities(const ExactMatrix& m);

Verdict CheckPredicted(const PredictedSpectrum& exact,
                       const PredictedSpectrum& predicted);
Verdict CheckPredicted(const ExactMatrix& m, const PredictedSpectrum& predicted);

Verdict CheckDspecSize(const SpectrumReport& report);

// Exact residual M x - mu x and pairwise inner products.
Verdict CheckEigenbasis(const ExactMatrix& m,
                        const std::vector<EigenPair>& basis);

// Sorted numeric eigenvalues against the exact multiset scaled by lambda,
// within tolerance * max(1, |lambda|).
Verdict CheckNumericAgreement(const SpectrumReport& report, double lambda,
                              double tolerance = 1e-9);

// Sorted multiset of lambda * mu, repeated by exact multiplicity.
std::vector<double> ExpectedEigenvalues(const PredictedSpectrum& exact,
                                        double lambda);

// Fills report.numeric and report.max_deviation from Jacobi.
void AttachNumeric(SpectrumReport& report, const ExactMatrix& m,
                   double lambda);

struct Certificate {
  std::vector<Verdict> verdicts;
  SpectrumReport spectrum;

  bool all_passed() const;
  const Verdict* first_failure() const;
};

struct CertifyOptions {
  double lambda = 1.0;
  bool numeric = true;
  bool eigenbasis = false;
};

// Checks a matrix against its graph and predicted spectrum: symmetry,
// pattern, diagonal, annihilator, exact multiplicities, distinct count and,
// optionally, the numeric spectrum.
Certificate CertifyMatrix(const Graph& g, const ExactMatrix& m,
                          const PredictedSpectrum& predicted,
                          const CertifyOptions& options = {});

// CertifyMatrix plus twin-sequence replay and, optionally, the eigenbasis.
// Runs every check on a synthesized matrix for graph g. Exceptions from the
// numeric path are reported as failed verdicts, not rethrown.
Certificate Certify(const Graph& g, const TwinSequence& seq,
                    const Synthesis& synthesis,
                    const CertifyOptions& options = {});

}  // namespace cograph

#endif  // COGRAPH_VERIFY_H_
