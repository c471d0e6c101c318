#include "hlx/prime_tuples.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>

#include "hlx/errors.hpp"
#include "hlx/format.hpp"
#include "hlx/sequences.hpp"

namespace hlx {

TuplePattern::TuplePattern(std::vector<std::uint64_t> offsets) : offsets_(std::move(offsets)) {
  if (!offsets_.empty() && offsets_.front() == 0) offsets_.erase(offsets_.begin());
  if (offsets_.empty()) throw DomainError("tuple pattern needs at least one positive offset");
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    if (offsets_[i] % 2 != 0) {
      throw DomainError("tuple offset " + std::to_string(offsets_[i]) + " is not even");
    }
    if (i > 0 && offsets_[i] <= offsets_[i - 1]) {
      throw DomainError("tuple offsets must be strictly increasing");
    }
  }
}

std::string TuplePattern::to_string() const {
  std::string s = "0";
  for (auto o : offsets_) s += "," + std::to_string(o);
  return s;
}

std::uint64_t w_residues(std::uint64_t q, const TuplePattern& pattern) {
  if (!is_prime_trial(q)) throw DomainError("w(q) requires prime q, got " + std::to_string(q));
  std::vector<std::uint64_t> residues{0};
  for (auto o : pattern.offsets()) residues.push_back(o % q);
  std::sort(residues.begin(), residues.end());
  return static_cast<std::uint64_t>(std::unique(residues.begin(), residues.end()) -
                                    residues.begin());
}

Admissibility is_admissible(const TuplePattern& pattern) {
  // k+1 residues cannot cover a prime q > k+1.
  const std::uint64_t bound = pattern.k() + 1;
  for (std::uint64_t q = 2; q <= bound; ++q) {
    if (!is_prime_trial(q)) continue;
    if (w_residues(q, pattern) == q) return {false, q};
  }
  return {true, std::nullopt};
}

namespace {

[[noreturn]] void throw_inadmissible(const TuplePattern& pattern, std::uint64_t witness) {
  throw InadmissibleError("pattern (" + pattern.to_string() +
                              ") covers every residue class modulo " + std::to_string(witness),
                          witness);
}

}  // namespace

RealValue singular_series(const TuplePattern& pattern, std::uint64_t q_bound) {
  if (q_bound < 3) throw DomainError("singular series requires q_bound >= 3");
  if (const auto adm = is_admissible(pattern); !adm.admissible) {
    throw_inadmissible(pattern, *adm.witness);
  }
  const auto k = static_cast<long double>(pattern.k());
  std::vector<std::uint64_t> residues;
  long double log_sum = 0;
  for (const std::uint64_t q : primes_up_to(q_bound)) {
    if (q == 2) continue;
    std::uint64_t w = pattern.k() + 1;
    if (q <= pattern.max_offset()) {
      residues.assign(1, 0);
      for (auto o : pattern.offsets()) residues.push_back(o % q);
      std::sort(residues.begin(), residues.end());
      w = static_cast<std::uint64_t>(std::unique(residues.begin(), residues.end()) -
                                     residues.begin());
    }
    const long double inv_q = 1.0L / static_cast<long double>(q);
    log_sum += -(k + 1) * std::log1p(-inv_q) + std::log1p(-static_cast<long double>(w) * inv_q);
  }
  const long double value = std::exp2(k) * std::exp(log_sum);
  const long double tail = k * (k + 1) / static_cast<long double>(q_bound - 1);
  return {static_cast<double>(value), static_cast<double>(value * std::expm1(tail))};
}

std::uint64_t required_sieve_limit(const TuplePattern& pattern, double x) {
  const auto n = x < 0 ? std::uint64_t{0} : static_cast<std::uint64_t>(std::floor(x));
  return n + pattern.max_offset();
}

namespace {

std::uint64_t checked_floor(const SieveRange& s, const TuplePattern& pattern, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("tuple count requires x >= 0");
  const std::uint64_t need = required_sieve_limit(pattern, x);
  if (need > s.limit()) {
    throw RangeError("tuple count at x=" + format_shortest(x) + " needs sieve limit " +
                     std::to_string(need) + ", have " + std::to_string(s.limit()));
  }
  return static_cast<std::uint64_t>(std::floor(x));
}

}  // namespace

std::uint64_t tuple_count(const SieveRange& s, const TuplePattern& pattern, double x) {
  const std::uint64_t n = checked_floor(s, pattern, x);
  if (n < 3) return 0;  // p = 2 never works with even offsets
  // Odd p = 2i+1 with i in [1, last]; p + 2m is bit i + m.
  const std::uint64_t last = (n - 1) / 2;
  const std::uint64_t words = last / 64 + 1;
  std::vector<std::uint64_t> shifts;
  for (auto o : pattern.offsets()) shifts.push_back(o / 2);
  const auto base = s.words();

  std::uint64_t total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
  for (std::int64_t wi = 0; wi < static_cast<std::int64_t>(words); ++wi) {
    const auto w = static_cast<std::uint64_t>(wi);
    std::uint64_t mask = base[w];
    for (const auto m : shifts) mask &= s.bits_at(w * 64 + m);
    if (w == last / 64) {
      const unsigned used = static_cast<unsigned>(last % 64) + 1;
      if (used < 64) mask &= (std::uint64_t{1} << used) - 1;
    }
    total += static_cast<std::uint64_t>(std::popcount(mask));
  }
  return total;
}

std::uint64_t tuple_count_serial(const SieveRange& s, const TuplePattern& pattern, double x) {
  const std::uint64_t n = checked_floor(s, pattern, x);
  std::uint64_t count = 0;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (!s.is_prime(p)) continue;
    bool all = true;
    for (auto o : pattern.offsets()) {
      if (!s.is_prime(p + o)) {
        all = false;
        break;
      }
    }
    if (all) ++count;
  }
  return count;
}

HlComparison hl_compare(const SieveRange& s, const TuplePattern& pattern,
                        std::span<const double> x_grid, std::size_t terms,
                        std::uint64_t q_bound) {
  if (const auto adm = is_admissible(pattern); !adm.admissible) {
    throw_inadmissible(pattern, *adm.witness);
  }
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    if (!(x_grid[i] > 2.0)) throw DomainError("comparison grid requires x > 2");
    if (i > 0 && !(x_grid[i] > x_grid[i - 1])) {
      throw DomainError("x grid must be strictly increasing");
    }
    checked_floor(s, pattern, x_grid[i]);
  }
  const RealValue constant = singular_series(pattern, q_bound);
  const auto density_k = static_cast<unsigned>(pattern.k() + 1);
  HlComparison out{pattern, terms, constant, std::vector<HlRow>(x_grid.size())};
  a_seq_prefix(density_k, terms);

  std::vector<std::exception_ptr> failures(x_grid.size());
  const auto n = static_cast<std::ptrdiff_t>(x_grid.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      const double x = x_grid[static_cast<std::size_t>(i)];
      HlRow row{};
      row.x = x;
      row.count = tuple_count(s, pattern, x);
      row.prediction_a = constant.value * quad_li_k(density_k, 2.0, x).value;
      row.prediction_b = constant.value / expansion_partial(density_k, x, terms).value;
      row.ratio_a = static_cast<double>(row.count) / row.prediction_a;
      row.ratio_b = static_cast<double>(row.count) / row.prediction_b;
      out.rows[static_cast<std::size_t>(i)] = row;
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);
  return out;
}

Reference prime_count_reference(const SieveRange& s) {
  return {"pi", [&s](double x) { return static_cast<double>(prime_count(s, x)); }};
}

Reference tuple_count_reference(const SieveRange& s, const TuplePattern& pattern,
                                double singular_constant) {
  return {"tuples", [&s, pattern, singular_constant](double x) {
            return static_cast<double>(tuple_count(s, pattern, x)) / singular_constant;
          }};
}

}  // namespace hlx
