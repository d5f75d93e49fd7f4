#include "cograph/numeric.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace cograph {

namespace {

double OffDiagonalNorm(const DenseMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

// Applies the rotation in the (p, q) plane that zeroes a(p, q).
void Rotate(DenseMatrix& a, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;
  for (int r = 0; r < a.n; ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
    a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
  }
}

}  // namespace

double DenseMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double x : data) sum += x * x;
  return std::sqrt(sum);
}

JacobiNotConverged::JacobiNotConverged(int sweeps, double off_norm)
    : std::runtime_error("Jacobi did not converge after " +
                         std::to_string(sweeps) + " sweeps (off-norm " +
                         std::to_string(off_norm) + ")"),
      sweeps_(sweeps),
      off_norm_(off_norm) {}

std::vector<double> NumericEigenvalues(const DenseMatrix& m,
                                       const JacobiOptions& options) {
  const double norm = m.frobenius_norm();
  for (int i = 0; i < m.n; ++i) {
    for (int j = i + 1; j < m.n; ++j) {
      if (std::fabs(m(i, j) - m(j, i)) > 1e-12 * norm) {
        throw std::invalid_argument("matrix is not symmetric at (" +
                                    std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
      }
    }
  }

  DenseMatrix a = m;
  // Symmetrize exactly so rotations keep both triangles in sync.
  for (int i = 0; i < a.n; ++i) {
    for (int j = i + 1; j < a.n; ++j) {
      a(i, j) = a(j, i) = 0.5 * (m(i, j) + m(j, i));
    }
  }

  const double threshold = options.tolerance * norm;
  int sweeps = 0;
  double off = OffDiagonalNorm(a);
  while (off >= threshold && off > 0.0) {
    if (sweeps == options.max_sweeps) throw JacobiNotConverged(sweeps, off);
    for (int p = 0; p < a.n; ++p) {
      for (int q = p + 1; q < a.n; ++q) Rotate(a, p, q);
    }
    ++sweeps;
    off = OffDiagonalNorm(a);
  }

  std::vector<double> values(a.n);
  for (int i = 0; i < a.n; ++i) values[i] = a(i, i);
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace cograph
