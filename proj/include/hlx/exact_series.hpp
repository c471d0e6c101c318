#pragma once

// Truncated formal power series over exact rationals.
//
// A TruncatedSeries of order N stores c_0..c_N. Binary operations truncate to
// the smaller operand order; nothing is ever padded with zeros to fake
// precision.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hlx {

using BigInt = mpz_class;
// mpq_class keeps numerator/denominator coprime with a positive denominator
// after every arithmetic operation.
using ExactRational = mpq_class;

ExactRational make_rational(const BigInt& num, const BigInt& den);

class TruncatedSeries {
 public:
  // Throws std::invalid_argument("empty series") on an empty list.
  static TruncatedSeries from_coeffs(std::vector<ExactRational> coeffs);
  static TruncatedSeries constant(const ExactRational& c, std::size_t order);
  static TruncatedSeries monomial(std::size_t degree, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const ExactRational& operator[](std::size_t n) const { return coeffs_[n]; }
  std::span<const ExactRational> coeffs() const noexcept { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const;
  TruncatedSeries scaled(const ExactRational& factor) const;
  bool is_zero() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  explicit TruncatedSeries(std::vector<ExactRational> coeffs);
  std::vector<ExactRational> coeffs_;
};

// sum_{n=0}^{order} (n+m)! x^n
TruncatedSeries make_A_series(unsigned m, std::size_t order);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// b with a*b = 1 through a.order(). Throws DomainError("non-invertible series")
// when c_0 = 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

// Coefficients as integers. Throws NonIntegralError carrying the first index
// whose denominator is not 1.
std::vector<BigInt> assert_integral(const TruncatedSeries& a);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(a, b);
}

}  // namespace hlx
