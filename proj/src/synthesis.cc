#include "cograph/synthesis.h"

#include <sstream>

namespace cograph {

namespace {

// Reads m_vv and checks it is 0 or lambda.
bool DiagonalIsLambda(const ExactMatrix& m, int v) {
  const ExactScalar& d = m(v, v);
  if (d.is_zero()) return false;
  if (d == ExactScalar(1)) return true;
  throw InternalInvariantViolation("diagonal entry m_" + std::to_string(v + 1) +
                                   "," + std::to_string(v + 1) + " = " +
                                   d.ToString() + " is neither 0 nor lambda");
}

SynthesisCase SelectCase(TwinKind kind, bool diagonal_is_lambda) {
  if (kind == TwinKind::kFalseTwin) {
    return diagonal_is_lambda ? SynthesisCase::kFalseLambda
                              : SynthesisCase::kFalseZero;
  }
  return diagonal_is_lambda ? SynthesisCase::kTrueLambda
                            : SynthesisCase::kTrueZero;
}

void CheckSequence(const TwinSequence& seq) {
  if (seq.order < 1) throw std::invalid_argument("twin sequence order < 1");
  // Replay validates vertex ranges and ordering.
  Replay(seq);
}

}  // namespace

std::string_view EigenvalueName(Eigenvalue mu) {
  switch (mu) {
    case Eigenvalue::kMinusLambda:
      return "-lambda";
    case Eigenvalue::kZero:
      return "0";
    case Eigenvalue::kLambda:
      return "lambda";
    case Eigenvalue::kTwoLambda:
      return "2lambda";
  }
  return "?";
}

Eigenvalue NewEigenvalue(SynthesisCase c) {
  switch (c) {
    case SynthesisCase::kFalseZero:
      return Eigenvalue::kZero;
    case SynthesisCase::kFalseLambda:
      return Eigenvalue::kLambda;
    case SynthesisCase::kTrueZero:
      return Eigenvalue::kTwoLambda;
    case SynthesisCase::kTrueLambda:
      return Eigenvalue::kMinusLambda;
  }
  throw std::invalid_argument("unknown synthesis case");
}

int& PredictedSpectrum::at(Eigenvalue mu) {
  switch (mu) {
    case Eigenvalue::kMinusLambda:
      return minus_lambda;
    case Eigenvalue::kZero:
      return zero;
    case Eigenvalue::kLambda:
      return lambda;
    case Eigenvalue::kTwoLambda:
      return two_lambda;
  }
  throw std::invalid_argument("unknown eigenvalue");
}

int PredictedSpectrum::at(Eigenvalue mu) const {
  return const_cast<PredictedSpectrum*>(this)->at(mu);
}

std::string ToString(const PredictedSpectrum& p) {
  std::ostringstream out;
  out << "minus=" << p.minus_lambda << " zero=" << p.zero
      << " lambda=" << p.lambda << " two=" << p.two_lambda;
  return out.str();
}

Synthesis Synthesize(const TwinSequence& seq) {
  CheckSequence(seq);
  const int n = seq.order;
  Synthesis out;
  out.matrix = ExactMatrix(n);
  out.predicted.zero = 1;  // M = [0] on the base vertex
  std::vector<bool> present(n, false);
  present[seq.base - 1] = true;

  ExactMatrix& m = out.matrix;
  for (const TwinStep& step : seq.steps) {
    const int v = step.twin_of - 1;
    const int w = step.added - 1;
    const SynthesisCase c = SelectCase(step.kind, DiagonalIsLambda(m, v));

    for (int u = 0; u < n; ++u) {
      if (!present[u] || u == v) continue;
      const ExactScalar scaled = m(u, v).DivSqrt2();
      m(u, v) = m(v, u) = scaled;
      m(u, w) = m(w, u) = scaled;
    }
    switch (c) {
      case SynthesisCase::kFalseZero:
        m(v, v) = m(w, w) = 0;
        m(v, w) = m(w, v) = 0;
        break;
      case SynthesisCase::kFalseLambda:
        m(v, v) = m(w, w) = 1;
        m(v, w) = m(w, v) = 0;
        break;
      case SynthesisCase::kTrueZero:
        m(v, v) = m(w, w) = 1;
        m(v, w) = m(w, v) = -1;
        break;
      case SynthesisCase::kTrueLambda:
        m(v, v) = m(w, w) = 0;
        m(v, w) = m(w, v) = 1;
        break;
    }
    present[w] = true;
    out.cases.push_back(c);
    ++out.predicted.at(NewEigenvalue(c));
  }
  return out;
}

std::vector<EigenPair> Eigenbasis(const TwinSequence& seq) {
  const Synthesis synthesis = Synthesize(seq);
  const int n = seq.order;
  std::vector<EigenPair> basis;
  ExactVector base(n);
  base[seq.base - 1] = 1;
  basis.push_back({std::move(base), Eigenvalue::kZero});

  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const int v = seq.steps[i].twin_of - 1;
    const int w = seq.steps[i].added - 1;
    for (auto& pair : basis) {
      const ExactScalar split = pair.vector[v].DivSqrt2();
      pair.vector[v] = split;
      pair.vector[w] = split;
    }
    ExactVector fresh(n);
    fresh[v] = ExactScalar::InvSqrt2();
    fresh[w] = -ExactScalar::InvSqrt2();
    basis.push_back({std::move(fresh), NewEigenvalue(synthesis.cases[i])});
  }
  return basis;
}

DenseMatrix ScaleToNumeric(const ExactMatrix& m, double lambda) {
  if (lambda == 0.0) throw std::invalid_argument("lambda must be nonzero");
  DenseMatrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      out(i, j) = static_cast<double>(static_cast<long double>(lambda) *
                                      m(i, j).ToLongDouble());
    }
  }
  return out;
}

}  // namespace cograph
