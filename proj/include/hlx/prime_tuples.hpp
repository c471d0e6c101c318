#pragma once

// Prime k-tuples: offset patterns, admissibility, the Hardy-Littlewood
// singular series and counts of p <= x with every p + offset prime.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hlx/sieve.hpp"
#include "hlx/special_functions.hpp"

namespace hlx {

class TuplePattern {
 public:
  // Strictly increasing positive even offsets 2m_1 < ... < 2m_k. A leading 0
  // (the p itself) is accepted and dropped. Throws DomainError otherwise.
  explicit TuplePattern(std::vector<std::uint64_t> offsets);

  std::span<const std::uint64_t> offsets() const noexcept { return offsets_; }
  std::size_t k() const noexcept { return offsets_.size(); }
  std::uint64_t max_offset() const noexcept { return offsets_.back(); }
  // "0,2,6"
  std::string to_string() const;

 private:
  std::vector<std::uint64_t> offsets_;
};

// |{0, 2m_1, ..., 2m_k} mod q|; DomainError unless q is prime.
std::uint64_t w_residues(std::uint64_t q, const TuplePattern& pattern);

struct Admissibility {
  bool admissible;
  std::optional<std::uint64_t> witness;  // a prime q with w(q) = q
};

Admissibility is_admissible(const TuplePattern& pattern);

inline constexpr std::uint64_t kDefaultQBound = 1'000'000;

// 2^k prod_{3 <= q <= q_bound} (1-1/q)^{-k-1} (1-w(q)/q), with error_bound
// value*(exp(k(k+1)/(q_bound-1)) - 1) for the omitted tail.
// InadmissibleError for inadmissible patterns.
RealValue singular_series(const TuplePattern& pattern, std::uint64_t q_bound = kDefaultQBound);

// #{p <= x : p, p + 2m_1, ..., p + 2m_k all prime}. Requires
// floor(x) + 2m_k <= s.limit(), RangeError naming the needed limit otherwise.
std::uint64_t tuple_count(const SieveRange& s, const TuplePattern& pattern, double x);
// Single-threaded candidate-by-candidate reference.
std::uint64_t tuple_count_serial(const SieveRange& s, const TuplePattern& pattern, double x);

std::uint64_t required_sieve_limit(const TuplePattern& pattern, double x);

struct HlRow {
  double x;
  std::uint64_t count;
  double prediction_a;  // C * integral_2^x dt/(log t)^{k+1}
  double prediction_b;  // C / S_N(k+1, x); conjectural, not a proven expansion
  double ratio_a;
  double ratio_b;
};

struct HlComparison {
  TuplePattern pattern;
  std::size_t terms;
  RealValue constant;
  std::vector<HlRow> rows;
};

HlComparison hl_compare(const SieveRange& s, const TuplePattern& pattern,
                        std::span<const double> x_grid, std::size_t terms,
                        std::uint64_t q_bound = kDefaultQBound);

// References for error_ratio_report: pi(x) with k = 1, and pi_P(x)/C with
// k = pattern.k() + 1 (so that 1/reference is comparable with 1/li_{k+1}).
Reference prime_count_reference(const SieveRange& s);
Reference tuple_count_reference(const SieveRange& s, const TuplePattern& pattern,
                                double singular_constant);

}  // namespace hlx
