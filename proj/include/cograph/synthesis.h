// Inductive construction of a matrix M in S(G) for a cograph G whose
// eigenvalues lie in {-lambda, 0, lambda, 2*lambda}.
//
// All exact work is done in lambda-units (lambda = 1); a concrete lambda is
// applied only when exporting to floating point.

#ifndef COGRAPH_SYNTHESIS_H_
#define COGRAPH_SYNTHESIS_H_

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cograph/exact.h"
#include "cograph/numeric.h"
#include "cograph/twins.h"

namespace cograph {

// The four target eigenvalues in lambda-units.
enum class Eigenvalue { kMinusLambda = -1, kZero = 0, kLambda = 1, kTwoLambda = 2 };

inline constexpr std::array<Eigenvalue, 4> kAllEigenvalues = {
    Eigenvalue::kMinusLambda, Eigenvalue::kZero, Eigenvalue::kLambda,
    Eigenvalue::kTwoLambda};

inline int LambdaUnits(Eigenvalue mu) { return static_cast<int>(mu); }
std::string_view EigenvalueName(Eigenvalue mu);

// Which 2x2 block was written for a twin step, selected by the twin kind and
// the current diagonal entry m_vv:
//   kFalseZero   false twins, m_vv = 0       block [[0,0],[0,0]], new eigenvalue 0
//   kFalseLambda false twins, m_vv = lambda  block [[1,0],[0,1]], new eigenvalue lambda
//   kTrueZero    true twins,  m_vv = 0       block [[1,-1],[-1,1]], new eigenvalue 2 lambda
//   kTrueLambda  true twins,  m_vv = lambda  block [[0,1],[1,0]], new eigenvalue -lambda
enum class SynthesisCase { kFalseZero = 1, kFalseLambda = 2, kTrueZero = 3, kTrueLambda = 4 };

Eigenvalue NewEigenvalue(SynthesisCase c);

struct PredictedSpectrum {
  int minus_lambda = 0;
  int zero = 0;
  int lambda = 0;
  int two_lambda = 0;

  int total() const { return minus_lambda + zero + lambda + two_lambda; }
  int& at(Eigenvalue mu);
  int at(Eigenvalue mu) const;

  friend bool operator==(const PredictedSpectrum&,
                         const PredictedSpectrum&) = default;
};

std::string ToString(const PredictedSpectrum& p);

struct Synthesis {
  ExactMatrix matrix;  // indexed by vertex label - 1
  PredictedSpectrum predicted;
  std::vector<SynthesisCase> cases;  // one per twin step
};

class InternalInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Starts from M = [0] on the base vertex and applies one case per step.
Synthesis Synthesize(const TwinSequence& seq);

struct EigenPair {
  ExactVector vector;
  Eigenvalue value;
};

// Orthonormal eigenbasis lifted alongside the construction: the base vector
// first, then one new vector per twin step.
std::vector<EigenPair> Eigenbasis(const TwinSequence& seq);

// Entry-wise lambda * value. Throws std::invalid_argument for lambda == 0.
DenseMatrix ScaleToNumeric(const ExactMatrix& m, double lambda);

}  // namespace cograph

#endif  // COGRAPH_SYNTHESIS_H_
