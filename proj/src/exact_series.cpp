#include "hlx/exact_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hlx/errors.hpp"

namespace hlx {

ExactRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

TruncatedSeries::TruncatedSeries(std::vector<ExactRational> coeffs)
    : coeffs_(std::move(coeffs)) {}

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<ExactRational> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("empty series");
  for (auto& c : coeffs) c.canonicalize();
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::constant(const ExactRational& c, std::size_t order) {
  std::vector<ExactRational> coeffs(order + 1);
  coeffs[0] = c;
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::monomial(std::size_t degree, std::size_t order) {
  std::vector<ExactRational> coeffs(order + 1);
  if (degree <= order) coeffs[degree] = 1;
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  const std::size_t n = std::min(order, this->order());
  return TruncatedSeries({coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1)});
}

TruncatedSeries TruncatedSeries::scaled(const ExactRational& factor) const {
  std::vector<ExactRational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * factor;
  return TruncatedSeries(std::move(out));
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const ExactRational& c) { return sgn(c) == 0; });
}

std::string TruncatedSeries::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].get_str();
  }
  return s + "]";
}

TruncatedSeries make_A_series(unsigned m, std::size_t order) {
  std::vector<ExactRational> coeffs(order + 1);
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), m);
  for (std::size_t n = 0; n <= order; ++n) {
    coeffs[n] = f;
    f *= static_cast<unsigned long>(n + m + 1);
  }
  return TruncatedSeries::from_coeffs(std::move(coeffs));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<ExactRational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = a[i] + b[i];
  return TruncatedSeries::from_coeffs(std::move(out));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<ExactRational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = a[i] - b[i];
  return TruncatedSeries::from_coeffs(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<ExactRational> out(n + 1);
  ExactRational term;
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      term = a[i] * b[j];
      out[i + j] += term;
    }
  }
  return TruncatedSeries::from_coeffs(std::move(out));
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
  if (sgn(a[0]) == 0) throw DomainError("non-invertible series");
  const std::size_t n = a.order();
  const ExactRational inv_c0 = 1 / a[0];
  std::vector<ExactRational> b(n + 1);
  b[0] = inv_c0;
  ExactRational acc;
  for (std::size_t i = 1; i <= n; ++i) {
    acc = 0;
    for (std::size_t j = 1; j <= i; ++j) acc += a[j] * b[i - j];
    b[i] = -inv_c0 * acc;
  }
  return TruncatedSeries::from_coeffs(std::move(b));
}

std::vector<BigInt> assert_integral(const TruncatedSeries& a) {
  std::vector<BigInt> out;
  out.reserve(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a[i].get_den() != 1) {
      throw NonIntegralError("non-integer coefficient at index " + std::to_string(i) + ": " +
                                 a[i].get_str(),
                             i);
    }
    out.push_back(a[i].get_num());
  }
  return out;
}

}  // namespace hlx
