#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "hlx/errors.hpp"
#include "hlx/exact_series.hpp"
#include "hlx/sequences.hpp"

using hlx::BigInt;
using hlx::ExactRational;
using hlx::TruncatedSeries;

namespace {

TruncatedSeries ints(std::initializer_list<long> values) {
  std::vector<ExactRational> c;
  for (long v : values) c.emplace_back(v);
  return TruncatedSeries::from_coeffs(std::move(c));
}

// Random rational coefficients with small numerators/denominators.
TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<ExactRational> c(order + 1);
  for (auto& v : c) v = hlx::make_rational(num(rng), den(rng));
  while (unit_constant && sgn(c[0]) == 0) c[0] = hlx::make_rational(num(rng), den(rng));
  return TruncatedSeries::from_coeffs(std::move(c));
}

// Indecomposable permutations of length n, by direct prefix inspection.
long count_indecomposable(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  long count = 0;
  do {
    bool ok = true;
    for (int j = 1; j < n && ok; ++j)
      if (*std::max_element(p.begin(), p.begin() + j) == j) ok = false;
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace

TEST_CASE("series_from_coeffs") {
  const auto one = ints({1});
  CHECK(one.order() == 0);
  CHECK(one[0] == 1);
  const auto x = ints({0, 1});
  CHECK(x.order() == 1);
  CHECK(x == TruncatedSeries::monomial(1, 1));
  CHECK(ints({1, 1, 2, 6}) == hlx::make_A_series(0, 3));
  CHECK_THROWS_WITH_AS(TruncatedSeries::from_coeffs({}), "empty series", std::invalid_argument);

  // stored normalized
  const auto half = TruncatedSeries::from_coeffs({ExactRational(BigInt(2), BigInt(4))});
  CHECK(half[0].get_num() == 1);
  CHECK(half[0].get_den() == 2);
}

TEST_CASE("make_A_series") {
  CHECK(hlx::make_A_series(0, 3) == ints({1, 1, 2, 6}));
  CHECK(hlx::make_A_series(2, 2) == ints({2, 6, 24}));
  CHECK(hlx::make_A_series(1, 4) == ints({1, 2, 6, 24, 120}));
  const auto a = hlx::make_A_series(3, 30);
  for (std::size_t n = 0; n <= 30; ++n) CHECK(a[n] == hlx::factorial(static_cast<unsigned>(n + 3)));
}

TEST_CASE("series_add") {
  CHECK(ints({1, 1}) + ints({0, 1}) == ints({1, 2}));
  CHECK(hlx::make_A_series(0, 3) + TruncatedSeries::constant(0, 3) == hlx::make_A_series(0, 3));
  CHECK(ints({1, -1}) + ints({0, 1}) == ints({1, 0}));
  // order is the minimum of the operands
  CHECK((ints({1, 1, 1}) + ints({1})).order() == 0);
}

TEST_CASE("series_mul") {
  CHECK(ints({1, 1, 0}) * ints({1, -1, 0}) == ints({1, 0, -1}));
  const auto a0 = hlx::make_A_series(0, 5);
  CHECK(a0 * TruncatedSeries::constant(1, 5) == a0);
  CHECK(TruncatedSeries::monomial(1, 3) * hlx::make_A_series(1, 3) == ints({0, 1, 2, 6}));
  CHECK((ints({1, 2, 3}) * ints({4, 5})).order() == 1);
}

TEST_CASE("series_reciprocal") {
  CHECK(hlx::series_reciprocal(ints({1})) == ints({1}));
  CHECK(hlx::series_reciprocal(ints({1, -1, 0, 0, 0})) == ints({1, 1, 1, 1, 1}));

  // 1/A_0 = 1 - sum I_n x^n, with I_n from enumeration.
  std::vector<long> expected{1};
  for (int n = 1; n <= 4; ++n) expected.push_back(-count_indecomposable(n));
  CHECK(expected == std::vector<long>{1, -1, -1, -3, -13});
  const auto recip = hlx::series_reciprocal(hlx::make_A_series(0, 4));
  for (std::size_t n = 0; n <= 4; ++n) CHECK(recip[n] == expected[n]);

  CHECK_THROWS_WITH_AS(hlx::series_reciprocal(ints({0, 1})), "non-invertible series",
                       hlx::DomainError);

  const auto third = hlx::series_reciprocal(TruncatedSeries::from_coeffs({ExactRational(3), 1}));
  CHECK(third[0] == hlx::make_rational(1, 3));
  CHECK(third[1] == hlx::make_rational(-1, 9));
}

TEST_CASE("assert_integral") {
  CHECK(hlx::assert_integral(ints({1, -1})) == std::vector<BigInt>{1, -1});

  const auto scaled = hlx::series_reciprocal(hlx::make_A_series(2, 6)).scaled(hlx::factorial(2));
  const auto coeffs = hlx::assert_integral(scaled);
  CHECK(coeffs.size() == 7);
  CHECK(coeffs[0] == 1);

  try {
    hlx::assert_integral(TruncatedSeries::from_coeffs({hlx::make_rational(1, 2)}));
    FAIL("expected NonIntegralError");
  } catch (const hlx::NonIntegralError& e) {
    CHECK(e.index() == 0);
  }
  try {
    hlx::assert_integral(TruncatedSeries::from_coeffs({1, 2, hlx::make_rational(5, 3)}));
    FAIL("expected NonIntegralError");
  } catch (const hlx::NonIntegralError& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("property: a * (1/a) == 1 exactly") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> order_dist(0, 40);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_series(rng, order_dist(rng), true);
    const auto product = a * hlx::series_reciprocal(a);
    CHECK(product == TruncatedSeries::constant(1, a.order()));
  }
}

TEST_CASE("property: (k-1)! + x A_k = A_{k-1}") {
  for (unsigned k = 1; k <= 8; ++k) {
    for (std::size_t order = 0; order <= 40; ++order) {
      const auto lhs = TruncatedSeries::constant(ExactRational(hlx::factorial(k - 1)), order) +
                       TruncatedSeries::monomial(1, order) * hlx::make_A_series(k, order);
      REQUIRE(lhs == hlx::make_A_series(k - 1, order));
    }
  }
}

TEST_CASE("property: multiplication is commutative and associative") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> order_dist(0, 20);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_series(rng, order_dist(rng), false);
    const auto b = random_series(rng, order_dist(rng), false);
    const auto c = random_series(rng, order_dist(rng), false);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("property: (k-1)! / A_{k-1} has integer coefficients") {
  for (unsigned k = 1; k <= 6; ++k) {
    const auto scaled =
        hlx::series_reciprocal(hlx::make_A_series(k - 1, 30)).scaled(hlx::factorial(k - 1));
    CHECK_NOTHROW(hlx::assert_integral(scaled));
  }
}
