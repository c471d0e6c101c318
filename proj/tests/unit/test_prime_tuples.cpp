#include "doctest.h"

#include <cmath>
#include <random>

#include "hlx/errors.hpp"
#include "hlx/prime_tuples.hpp"

using hlx::TuplePattern;

TEST_CASE("TuplePattern validation") {
  CHECK(TuplePattern({0, 2}).k() == 1);
  CHECK(TuplePattern({2, 6}).k() == 2);
  CHECK(TuplePattern({0, 2, 6}).to_string() == "0,2,6");
  CHECK_THROWS_AS(TuplePattern({0, 3}), hlx::DomainError);
  CHECK_THROWS_AS(TuplePattern({0, 6, 2}), hlx::DomainError);
  CHECK_THROWS_AS(TuplePattern({0, 2, 2}), hlx::DomainError);
  CHECK_THROWS_AS(TuplePattern({0}), hlx::DomainError);
  CHECK_THROWS_AS(TuplePattern(std::vector<std::uint64_t>{}), hlx::DomainError);
}

TEST_CASE("w_residues") {
  CHECK(hlx::w_residues(3, TuplePattern({0, 2})) == 2);
  CHECK(hlx::w_residues(2, TuplePattern({0, 2})) == 1);
  CHECK(hlx::w_residues(3, TuplePattern({0, 2, 4})) == 3);
  CHECK_THROWS_AS(hlx::w_residues(9, TuplePattern({0, 2})), hlx::DomainError);
}

TEST_CASE("property: 1 <= w(q) <= min(q, k+1)") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> gap(1, 15);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> offsets{0};
    const int k = len(rng);
    for (int i = 0; i < k; ++i) offsets.push_back(offsets.back() + 2 * gap(rng));
    const TuplePattern p(offsets);
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 101}) {
      const auto w = hlx::w_residues(q, p);
      CHECK(w >= 1);
      CHECK(w <= std::min<std::uint64_t>(q, p.k() + 1));
    }
    // witness, when present, really is covered; otherwise no small prime is
    const auto adm = hlx::is_admissible(p);
    if (adm.admissible) {
      for (std::uint64_t q : {2, 3, 5, 7}) CHECK(hlx::w_residues(q, p) < q);
    } else {
      REQUIRE(adm.witness);
      CHECK(hlx::w_residues(*adm.witness, p) == *adm.witness);
    }
  }
}

TEST_CASE("is_admissible") {
  CHECK(hlx::is_admissible(TuplePattern({0, 2})).admissible);
  const auto bad = hlx::is_admissible(TuplePattern({0, 2, 4}));
  CHECK_FALSE(bad.admissible);
  CHECK(bad.witness == 3u);
  CHECK(hlx::is_admissible(TuplePattern({0, 4, 6})).admissible);
  for (std::uint64_t m = 1; m <= 200; ++m) CHECK(hlx::is_admissible(TuplePattern({0, 2 * m})).admissible);
  CHECK(hlx::is_admissible(TuplePattern({0, 2, 6, 8, 12})).admissible);
  CHECK(hlx::is_admissible(TuplePattern({0, 2, 4, 6, 8})).witness == 3u);
}

TEST_CASE("singular_series for twins") {
  const TuplePattern twin({0, 2});
  const auto c = hlx::singular_series(twin, 10'000'000);
  CHECK(std::fabs(c.value - 1.320323632) < 1e-6);
  REQUIRE(c.error_bound);
  CHECK(*c.error_bound < 1e-5);
  CHECK(hlx::singular_series(TuplePattern({0, 4}), 10'000'000).value == doctest::Approx(c.value).epsilon(1e-15));

  // k = 1 factor simplifies to 1 - 1/(q-1)^2.
  for (std::uint64_t bound : {100ull, 100'000ull}) {
    long double product = 2;
    for (auto q : hlx::primes_up_to(bound)) {
      if (q == 2) continue;
      const long double d = static_cast<long double>(q - 1);
      product *= 1 - 1 / (d * d);
    }
    CHECK(std::fabs(hlx::singular_series(twin, bound).value - static_cast<double>(product)) <=
          1e-12 * static_cast<double>(product));
  }
}

TEST_CASE("property: singular series stable under doubling the prime bound") {
  for (const auto& offsets : {std::vector<std::uint64_t>{0, 2}, std::vector<std::uint64_t>{0, 2, 6},
                              std::vector<std::uint64_t>{0, 4, 6, 10}}) {
    const TuplePattern p(offsets);
    for (std::uint64_t q : {10'000ull, 100'000ull, 1'000'000ull}) {
      const auto a = hlx::singular_series(p, q);
      const auto b = hlx::singular_series(p, 2 * q);
      CHECK(std::fabs(a.value - b.value) <= *a.error_bound);
    }
  }
  const TuplePattern triple({0, 2, 6});
  CHECK(std::fabs(hlx::singular_series(triple, 10'000'000).value -
                  hlx::singular_series(triple, 20'000'000).value) < 1e-6);
  CHECK_THROWS_AS(hlx::singular_series(TuplePattern({0, 2, 4}), 1000), hlx::InadmissibleError);
}

TEST_CASE("tuple_count") {
  const auto s = hlx::sieve(2'000'000);
  CHECK(hlx::tuple_count(s, TuplePattern({0, 2}), 100.0) == 8);
  CHECK(hlx::tuple_count(s, TuplePattern({0, 2}), 3.0) == 1);
  CHECK(hlx::tuple_count(s, TuplePattern({0, 2}), 2.0) == 0);
  CHECK(hlx::tuple_count(s, TuplePattern({0, 2, 4}), 1e6) == 1);
  CHECK(hlx::tuple_count(s, TuplePattern({0, 2}), 1e6) == 8169);
  try {
    hlx::tuple_count(s, TuplePattern({0, 2}), 2e6);
    FAIL("expected RangeError");
  } catch (const hlx::RangeError& e) {
    CHECK(std::string(e.what()).find("2000002") != std::string::npos);
  }
}

TEST_CASE("word-parallel tuple count matches the serial reference") {
  const auto s = hlx::sieve(300'000);
  for (const auto& offsets :
       {std::vector<std::uint64_t>{0, 2}, std::vector<std::uint64_t>{0, 4}, std::vector<std::uint64_t>{0, 2, 6},
        std::vector<std::uint64_t>{0, 4, 6}, std::vector<std::uint64_t>{0, 130},
        std::vector<std::uint64_t>{0, 2, 6, 8}, std::vector<std::uint64_t>{0, 2, 4}}) {
    const TuplePattern p(offsets);
    for (double x : {5.0, 63.0, 127.0, 128.0, 129.0, 1000.0, 99'999.0, 200'000.0}) {
      CHECK_MESSAGE(hlx::tuple_count(s, p, x) == hlx::tuple_count_serial(s, p, x),
                    p.to_string() << " x=" << x);
    }
  }
}

TEST_CASE("property: counted tuples re-verify on a sample; count <= pi") {
  const auto s = hlx::sieve(1'000'100);
  const TuplePattern p({0, 6});
  std::mt19937_64 rng(5);
  std::bernoulli_distribution sample(0.01);
  std::uint64_t counted = 0;
  for (std::uint64_t q = 3; q <= 1'000'000; q += 2) {
    if (!s.is_prime(q) || !s.is_prime(q + 6)) continue;
    ++counted;
    if (sample(rng)) {
      CHECK(hlx::is_prime_trial(q));
      CHECK(hlx::is_prime_trial(q + 6));
    }
  }
  CHECK(counted == hlx::tuple_count(s, p, 1e6));
  for (double x : {10.0, 1e3, 1e5, 1e6}) {
    CHECK(hlx::tuple_count(s, p, x) <= hlx::prime_count(s, x));
  }
}

TEST_CASE("hl_compare") {
  const auto s = hlx::sieve(10'000'002);
  const TuplePattern twin({0, 2});
  const std::vector<double> one{1e6};
  const auto single = hlx::hl_compare(s, twin, one, 2);
  REQUIRE(single.rows.size() == 1);
  CHECK(single.rows[0].count == 8169);
  CHECK(single.rows[0].ratio_a >= 0.9);
  CHECK(single.rows[0].ratio_a <= 1.1);

  const std::vector<double> grid{1e4, 1e5, 1e6, 1e7};
  const auto cmp = hlx::hl_compare(s, twin, grid, 2);
  int non_increasing = 0;
  for (std::size_t i = 0; i + 1 < cmp.rows.size(); ++i) {
    if (std::fabs(cmp.rows[i + 1].ratio_a - 1) <= std::fabs(cmp.rows[i].ratio_a - 1)) ++non_increasing;
  }
  CHECK(non_increasing >= 2);
  for (const auto& row : cmp.rows) {
    CHECK(row.prediction_a > 0);
    CHECK(row.prediction_b > 0);
  }

  try {
    hlx::hl_compare(s, TuplePattern({0, 2, 4}), one, 2);
    FAIL("expected InadmissibleError");
  } catch (const hlx::InadmissibleError& e) {
    CHECK(e.witness() == 3);
  }
  const std::vector<double> too_far{2e7};
  CHECK_THROWS_AS(hlx::hl_compare(s, twin, too_far, 2), hlx::RangeError);
}

TEST_CASE("references for error_ratio_report") {
  const auto s = hlx::sieve(10'000'000);
  const std::vector<double> grid{1e7};
  const auto r = hlx::error_ratio_report(1, 3, grid, hlx::prime_count_reference(s));
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].reference_value == 664579.0);
  CHECK(std::isfinite(r.rows[0].normalized_error));
  // mpmath: (1/664579 - S_3) / phi_3 at 1e7
  CHECK(r.rows[0].normalized_error == doctest::Approx(23.946322634165883).epsilon(1e-9));

  const std::vector<double> beyond{2e7};
  CHECK_THROWS_AS(hlx::error_ratio_report(1, 3, beyond, hlx::prime_count_reference(s)),
                  hlx::RangeError);

  const TuplePattern twin({0, 2});
  const double c = hlx::singular_series(twin).value;
  const std::vector<double> tgrid{1e5, 1e6};
  const auto t = hlx::error_ratio_report(2, 1, tgrid, hlx::tuple_count_reference(s, twin, c));
  CHECK(t.rows[1].reference_value == doctest::Approx(8169.0 / c));
}
