#include "hlx/special_functions.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <exception>
#include <limits>

#include "hlx/errors.hpp"
#include "hlx/format.hpp"
#include "hlx/sequences.hpp"

namespace hlx {

namespace {

using Real = long double;

// gamma + ln y + sum_{n>=1} y^n / (n n!). Every term is positive for y > 0.
Real ei_convergent(Real y) {
  Real term = 1;  // y^n / n!
  Real sum = 0;
  for (int n = 1; n < 1000; ++n) {
    term *= y / n;
    const Real contribution = term / n;
    sum += contribution;
    if (contribution < sum * std::numeric_limits<Real>::epsilon()) break;
  }
  return static_cast<Real>(kEulerGamma) + std::log(y) + sum;
}

Real to_real(const BigInt& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::ldexp(static_cast<Real>(mant), static_cast<int>(exp));
}

void require_log_domain(double x, const char* what) {
  if (!(x > 1.0)) {
    throw DomainError(std::string(what) + " requires x > 1, got " + format_shortest(x));
  }
}

}  // namespace

RealValue ei(double y) {
  if (!(y > 0.0)) throw DomainError("Ei requires y > 0, got " + format_shortest(y));
  if (y <= kEiSeriesLimit) {
    return {static_cast<double>(ei_convergent(y)), std::nullopt};
  }
  // (e^y / y) sum n!/y^n, cut before the smallest term.
  const Real yl = y;
  Real term = 1;
  Real sum = 0;
  for (int n = 1;; ++n) {
    const Real next = term * n / yl;
    sum += term;
    if (next >= term) break;
    term = next;
    if (n > 10000) break;
  }
  const Real scale = std::exp(yl) / yl;
  const Real value = scale * sum;
  if (!std::isfinite(static_cast<double>(value))) {
    throw RangeError("Ei overflows binary64 at y=" + format_shortest(y));
  }
  return {static_cast<double>(value), static_cast<double>(scale * term)};
}

RealValue li(double x) {
  require_log_domain(x, "li");
  return ei(std::log(x));
}

RealValue li_k(unsigned k, double x) {
  if (k == 0) throw DomainError("li_k requires k >= 1");
  require_log_domain(x, "li_k");
  const RealValue base = li(x);
  if (k == 1) return base;
  const Real log_x = std::log(static_cast<Real>(x));
  Real correction = 0;
  Real i_fact = 1;
  Real log_pow = log_x;
  for (unsigned i = 0; i + 2 <= k; ++i) {
    if (i > 0) i_fact *= i;
    correction += i_fact / log_pow;
    log_pow *= log_x;
  }
  Real k1_fact = 1;
  for (unsigned j = 2; j < k; ++j) k1_fact *= j;
  const Real value = (static_cast<Real>(base.value) - x * correction) / k1_fact;
  std::optional<double> bound;
  if (base.error_bound) bound = static_cast<double>(*base.error_bound / k1_fact);
  return {static_cast<double>(value), bound};
}

RealValue quad_li_k(unsigned k, double a, double b) {
  if (k == 0) throw DomainError("quad_li_k requires k >= 1");
  if (!(a > 1.0)) throw DomainError("quad_li_k requires a > 1, got " + format_shortest(a));
  if (b < a) throw DomainError("quad_li_k requires a <= b");
  if (a == b) return {0.0, 0.0};
  const auto integrand = [k](double u) { return std::exp(u) / std::pow(u, static_cast<int>(k)); };
  double err = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, std::log(a), std::log(b), 60, 1e-12, &err);
  return {value, err};
}

RealValue expansion_partial(unsigned k, double x, std::size_t terms) {
  if (k == 0) throw DomainError("expansion requires k >= 1");
  require_log_domain(x, "expansion");
  const auto a = a_seq_prefix(k, terms);
  const Real log_x = std::log(static_cast<Real>(x));
  const Real u = 1 / log_x;
  // Horner for sum_{n=1}^{N} a_n u^{n-1}
  Real tail = 0;
  for (std::size_t n = terms; n >= 1; --n) tail = tail * u + to_real(a[n]);
  const Real inner = 1 - k * u - tail * u * u;
  const Real value = std::pow(log_x, static_cast<Real>(k)) / x * inner;
  return {static_cast<double>(value), std::nullopt};
}

double expansion_scale(unsigned k, double x, std::size_t terms) {
  require_log_domain(x, "expansion");
  const Real log_x = std::log(static_cast<Real>(x));
  const Real power = static_cast<Real>(k) - static_cast<Real>(terms) - 1;
  return static_cast<double>(std::pow(log_x, power) / x);
}

double expansion_first_omitted(unsigned k, double x, std::size_t terms) {
  const Real next = to_real(a_seq(k, terms + 1));
  const Real log_x = std::log(static_cast<Real>(x));
  return static_cast<double>(next / log_x * expansion_scale(k, x, terms));
}

Reference li_k_reference(unsigned k) {
  return {"li_k", [k](double x) { return li_k(k, x).value; }};
}

ExpansionReport error_ratio_report(unsigned k, std::size_t terms,
                                   std::span<const double> x_grid,
                                   const Reference& reference) {
  if (k == 0) throw DomainError("expansion requires k >= 1");
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    require_log_domain(x_grid[i], "expansion");
    if (i > 0 && !(x_grid[i] > x_grid[i - 1])) {
      throw DomainError("x grid must be strictly increasing");
    }
  }
  a_seq_prefix(k, terms);  // warm the shared table before the parallel loop

  ExpansionReport report{k, terms, reference.name, std::vector<ExpansionRow>(x_grid.size())};
  std::vector<std::exception_ptr> failures(x_grid.size());
  const auto n = static_cast<std::ptrdiff_t>(x_grid.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      const double x = x_grid[static_cast<std::size_t>(i)];
      const double ref = reference.value(x);
      if (!(ref > 0.0) || !std::isfinite(ref)) {
        throw RangeError("reference " + reference.name + " unavailable at x=" +
                         format_shortest(x));
      }
      const double s = expansion_partial(k, x, terms).value;
      const double phi = expansion_scale(k, x, terms);
      report.rows[static_cast<std::size_t>(i)] = {x, ref, s, (1.0 / ref - s) / phi};
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);
  return report;
}

}  // namespace hlx
