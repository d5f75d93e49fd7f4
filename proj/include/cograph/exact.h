// Exact arithmetic in the ring Z[sqrt2, 1/2] and dense symmetric matrices
// over it. Values are (a + b*sqrt2) / 2^k with big-integer a, b.

#ifndef COGRAPH_EXACT_H_
#define COGRAPH_EXACT_H_

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cograph {

// Canonical form: k > 0 implies a and b are not both even; zero is (0, 0, 0).
// Two values are equal iff their triples are equal.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value) : a_(value) {}  // NOLINT: implicit from integers
  ExactScalar(mpz_class a, mpz_class b, std::uint32_t k);

  static ExactScalar Sqrt2() { return ExactScalar(0, 1, 0); }
  static ExactScalar InvSqrt2() { return ExactScalar(0, 1, 1); }

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  std::uint32_t k() const { return k_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  // Sign of the real value.
  int sign() const;

  // a - b*sqrt2 over 2^k.
  ExactScalar conjugate() const { return ExactScalar(a_, -b_, k_); }

  ExactScalar DivSqrt2() const;
  ExactScalar Half() const;

  // Exact quotient in the ring. Throws std::domain_error on division by zero
  // and std::logic_error when the quotient is not a ring element.
  ExactScalar DivideExact(const ExactScalar& divisor) const;

  double ToDouble() const;
  long double ToLongDouble() const;

  // "a b k" with decimal integers.
  std::string ToTriple() const;
  // Human-readable, e.g. "-1/2*sqrt2" or "3+sqrt2".
  std::string ToString() const;

  ExactScalar operator-() const { return ExactScalar(-a_, -b_, k_); }
  ExactScalar& operator+=(const ExactScalar& other);
  ExactScalar& operator-=(const ExactScalar& other);
  ExactScalar& operator*=(const ExactScalar& other);

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) {
    return x += y;
  }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) {
    return x -= y;
  }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) {
    return x *= y;
  }
  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.k_ == y.k_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  void Canonicalize();

  mpz_class a_ = 0;
  mpz_class b_ = 0;
  std::uint32_t k_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

using ExactVector = std::vector<ExactScalar>;

ExactScalar Dot(const ExactVector& x, const ExactVector& y);

// Dense square matrix over ExactScalar, row-major, 0-based indices.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(int n) : n_(n), entries_(std::size_t(n) * n) {}

  static ExactMatrix Identity(int n);

  int dim() const { return n_; }
  const ExactScalar& operator()(int i, int j) const {
    return entries_[std::size_t(i) * n_ + j];
  }
  ExactScalar& operator()(int i, int j) {
    return entries_[std::size_t(i) * n_ + j];
  }

  bool is_symmetric() const;
  bool is_zero() const;
  ExactScalar trace() const;

  // Returns M - mu*I.
  ExactMatrix Shifted(const ExactScalar& mu) const;
  ExactVector Apply(const ExactVector& x) const;

  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<ExactScalar> entries_;
};

// Rank by fraction-free (Bareiss) elimination over the ring. Pivot is the
// first nonzero entry in column order, scanning rows from the current one.
// `row_order` permutes the initial row order (empty means identity).
int ExactRank(const ExactMatrix& m, const std::vector<int>& row_order = {});

}  // namespace cograph

#endif  // COGRAPH_EXACT_H_
