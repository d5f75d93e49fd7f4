#include "cograph/exact.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cograph {

namespace {

constexpr long double kSqrt2 = 1.41421356237309504880168872420969808L;

// Trailing zero bits of a nonzero integer.
std::uint32_t TrailingZeros(const mpz_class& x) {
  return static_cast<std::uint32_t>(mpz_scan1(x.get_mpz_t(), 0));
}

mpz_class Shifted(const mpz_class& x, std::uint32_t bits) {
  mpz_class out;
  mpz_mul_2exp(out.get_mpz_t(), x.get_mpz_t(), bits);
  return out;
}

}  // namespace

ExactScalar::ExactScalar(mpz_class a, mpz_class b, std::uint32_t k)
    : a_(std::move(a)), b_(std::move(b)), k_(k) {
  Canonicalize();
}

void ExactScalar::Canonicalize() {
  if (a_ == 0 && b_ == 0) {
    k_ = 0;
    return;
  }
  if (k_ == 0) return;
  std::uint32_t shift = k_;
  if (a_ != 0) shift = std::min(shift, TrailingZeros(a_));
  if (b_ != 0) shift = std::min(shift, TrailingZeros(b_));
  if (shift == 0) return;
  mpz_tdiv_q_2exp(a_.get_mpz_t(), a_.get_mpz_t(), shift);
  mpz_tdiv_q_2exp(b_.get_mpz_t(), b_.get_mpz_t(), shift);
  k_ -= shift;
}

int ExactScalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: compare a^2 with 2 b^2.
  const int order = cmp(mpz_class(a_ * a_), mpz_class(2 * b_ * b_));
  return order > 0 ? sa : (order < 0 ? sb : 0);
}

ExactScalar ExactScalar::DivSqrt2() const {
  // (a + b sqrt2) / sqrt2 = (2b + a sqrt2) / 2
  return ExactScalar(Shifted(b_, 1), a_, k_ + 1);
}

ExactScalar ExactScalar::Half() const {
  if (is_zero()) return *this;
  return ExactScalar(a_, b_, k_ + 1);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const std::uint32_t k = std::max(k_, other.k_);
  a_ = Shifted(a_, k - k_) + Shifted(other.a_, k - other.k_);
  b_ = Shifted(b_, k - k_) + Shifted(other.b_, k - other.k_);
  k_ = k;
  Canonicalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& other) {
  return *this += -other;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& other) {
  if (is_zero() || other.is_zero()) return *this = ExactScalar();
  mpz_class a = a_ * other.a_ + 2 * b_ * other.b_;
  mpz_class b = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  k_ += other.k_;
  Canonicalize();
  return *this;
}

ExactScalar ExactScalar::DivideExact(const ExactScalar& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("exact division by zero");
  if (is_zero()) return ExactScalar();
  const mpz_class& c = divisor.a_;
  const mpz_class& d = divisor.b_;
  // x / y = x * conj(y) / N(y), N(y) = c^2 - 2 d^2 (scaled by 4^ky).
  mpz_class p = a_ * c - 2 * b_ * d;
  mpz_class q = b_ * c - a_ * d;
  mpz_class norm = c * c - 2 * d * d;
  // x/y = (p + q sqrt2) * 2^(2ky) / (2^kx * 2^ky * norm)
  //     = (p + q sqrt2) * 2^ky / (2^kx * norm)
  const std::uint32_t two_power = TrailingZeros(norm);
  mpz_class odd;
  mpz_tdiv_q_2exp(odd.get_mpz_t(), norm.get_mpz_t(), two_power);
  if (!mpz_divisible_p(p.get_mpz_t(), odd.get_mpz_t()) ||
      !mpz_divisible_p(q.get_mpz_t(), odd.get_mpz_t())) {
    throw std::logic_error("quotient " + ToString() + " / " +
                           divisor.ToString() + " is not in Z[sqrt2,1/2]");
  }
  mpz_divexact(p.get_mpz_t(), p.get_mpz_t(), odd.get_mpz_t());
  mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), odd.get_mpz_t());
  // Denominator exponent: kx + two_power - ky, may be negative.
  const std::int64_t k = std::int64_t(k_) + two_power - divisor.k_;
  if (k >= 0) return ExactScalar(std::move(p), std::move(q), std::uint32_t(k));
  const auto up = static_cast<std::uint32_t>(-k);
  return ExactScalar(Shifted(p, up), Shifted(q, up), 0);
}

long double ExactScalar::ToLongDouble() const {
  // mpz_get_d truncates only beyond 53 bits; entries here stay far below.
  const long double a = mpz_get_d(a_.get_mpz_t());
  const long double b = mpz_get_d(b_.get_mpz_t());
  return std::ldexp(a + b * kSqrt2, -static_cast<int>(k_));
}

double ExactScalar::ToDouble() const {
  return static_cast<double>(ToLongDouble());
}

std::string ExactScalar::ToTriple() const {
  return a_.get_str() + " " + b_.get_str() + " " + std::to_string(k_);
}

std::string ExactScalar::ToString() const {
  if (is_zero()) return "0";
  std::string num;
  if (a_ != 0) num = a_.get_str();
  if (b_ != 0) {
    if (!num.empty() && b_ > 0) num += "+";
    if (b_ == 1) {
      num += "sqrt2";
    } else if (b_ == -1) {
      num += "-sqrt2";
    } else {
      num += b_.get_str() + "*sqrt2";
    }
  }
  if (k_ == 0) return num;
  const std::string den = "2^" + std::to_string(k_);
  return (a_ != 0 && b_ != 0 ? "(" + num + ")" : num) + "/" + den;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
  return os << x.ToString();
}

ExactScalar Dot(const ExactVector& x, const ExactVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("Dot size mismatch");
  ExactScalar sum;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() || y[i].is_zero()) continue;
    sum += x[i] * y[i];
  }
  return sum;
}

ExactMatrix ExactMatrix::Identity(int n) {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool ExactMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i))) return false;
    }
  }
  return true;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const ExactScalar& x) { return x.is_zero(); });
}

ExactScalar ExactMatrix::trace() const {
  ExactScalar t;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix ExactMatrix::Shifted(const ExactScalar& mu) const {
  ExactMatrix out = *this;
  for (int i = 0; i < n_; ++i) out(i, i) -= mu;
  return out;
}

ExactVector ExactMatrix::Apply(const ExactVector& x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw std::invalid_argument("Apply size mismatch");
  }
  ExactVector y(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const ExactScalar& m = (*this)(i, j);
      if (m.is_zero() || x[j].is_zero()) continue;
      y[i] += m * x[j];
    }
  }
  return y;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("matrix size mismatch");
  const int n = x.n_;
  ExactMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      const ExactScalar& xil = x(i, l);
      if (xil.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const ExactScalar& ylj = y(l, j);
        if (ylj.is_zero()) continue;
        out(i, j) += xil * ylj;
      }
    }
  }
  return out;
}

int ExactRank(const ExactMatrix& m, const std::vector<int>& row_order) {
  const int n = m.dim();
  std::vector<int> order = row_order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("row order has wrong length");
  }
  std::vector<ExactVector> rows(n, ExactVector(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = m(order[i], j);
  }

  ExactScalar previous = 1;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = rank;
    while (pivot < n && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[pivot], rows[rank]);
    const ExactScalar& p = rows[rank][col];
    for (int i = rank + 1; i < n; ++i) {
      const ExactScalar factor = rows[i][col];
      for (int j = col + 1; j < n; ++j) {
        ExactScalar value = p * rows[i][j] - factor * rows[rank][j];
        rows[i][j] = value.DivideExact(previous);
      }
      rows[i][col] = ExactScalar();
    }
    previous = p;
    ++rank;
  }
  return rank;
}

}  // namespace cograph
