// Floating-point symmetric eigenvalues by cyclic Jacobi rotations.

#ifndef COGRAPH_NUMERIC_H_
#define COGRAPH_NUMERIC_H_

#include <stdexcept>
#include <vector>

namespace cograph {

struct DenseMatrix {
  int n = 0;
  std::vector<double> data;  // row-major

  DenseMatrix() = default;
  explicit DenseMatrix(int dim) : n(dim), data(std::size_t(dim) * dim, 0.0) {}

  double operator()(int i, int j) const { return data[std::size_t(i) * n + j]; }
  double& operator()(int i, int j) { return data[std::size_t(i) * n + j]; }

  double frobenius_norm() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

struct JacobiOptions {
  double tolerance = 1e-12;  // relative to the Frobenius norm
  int max_sweeps = 100;
};

class JacobiNotConverged : public std::runtime_error {
 public:
  JacobiNotConverged(int sweeps, double off_norm);
  int sweeps() const { return sweeps_; }
  double off_norm() const { return off_norm_; }

 private:
  int sweeps_;
  double off_norm_;
};

// Sorted ascending. Throws std::invalid_argument when the input is not
// symmetric within 1e-12 relative, JacobiNotConverged after max_sweeps.
std::vector<double> NumericEigenvalues(const DenseMatrix& m,
                                       const JacobiOptions& options = {});

}  // namespace cograph

#endif  // COGRAPH_NUMERIC_H_
