#pragma once

// Ei, li, the Hardy-Littlewood integrals li_k and the truncated asymptotic
// expansion of 1/li_k(x) in powers of 1/log x.
//
// li_k for k >= 2 is the closed form
//   li_k(x) = (li(x) - x sum_{i=0}^{k-2} i!/(log x)^{i+1}) / (k-1)!
// which is an antiderivative of 1/(log t)^k. A symmetric principal value of
// the integral from 0 does not exist for k >= 2 (double pole at t = 1), so
// integrals with a concrete lower limit go through quad_li_k.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hlx {

struct RealValue {
  double value = 0.0;
  // Bounds |true - value| when the evaluator can claim one.
  std::optional<double> error_bound;
};

inline constexpr double kEulerGamma = 0.577215664901532860606512090082;
// Ei switches from the convergent series to the asymptotic series above this.
inline constexpr double kEiSeriesLimit = 45.0;

// Ei(y) for y > 0; DomainError otherwise, RangeError on binary64 overflow.
RealValue ei(double y);
// li(x) = Ei(log x) for x > 1.
RealValue li(double x);
RealValue li_k(unsigned k, double x);

// Integral of dt/(log t)^k over [a, b], 1 < a <= b, by adaptive Gauss-Kronrod
// on e^u/u^k after t = e^u.
RealValue quad_li_k(unsigned k, double a, double b);

// S_N(k, x) = ((log x)^k / x) (1 - k/log x - sum_{n=1}^{N} a_n^(k)/(log x)^{n+1}).
RealValue expansion_partial(unsigned k, double x, std::size_t terms);

// Asymptotic scale of the last term kept in S_N: (log x)^{k-N-1} / x.
double expansion_scale(unsigned k, double x, std::size_t terms);

// |a_{N+1}| (log x)^{k-N-2} / x, the first term S_N leaves out.
double expansion_first_omitted(unsigned k, double x, std::size_t terms);

// Reference function f whose reciprocal the expansion approximates.
struct Reference {
  std::string name;
  // Must be safe to call concurrently. Throws RangeError when f(x) is not
  // available.
  std::function<double(double)> value;
};

Reference li_k_reference(unsigned k);

struct ExpansionRow {
  double x;
  double reference_value;
  double partial_sum;
  double normalized_error;  // (1/reference - S_N) / phi_N
};

struct ExpansionReport {
  unsigned k;
  std::size_t terms;
  std::string reference;
  std::vector<ExpansionRow> rows;
};

// Rows come back in grid order. The grid must be strictly increasing with
// every x > 1.
ExpansionReport error_ratio_report(unsigned k, std::size_t terms,
                                   std::span<const double> x_grid,
                                   const Reference& reference);

}  // namespace hlx
