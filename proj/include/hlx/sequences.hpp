#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "hlx/exact_series.hpp"

namespace hlx {

BigInt factorial(unsigned n);

// Memoized a_n^(k): a_0 = 1 and for n >= 1
//   (k-1)! a_n = (n+k)! - k (n+k-1)! - sum_{m=0}^{n-2} (n-m+k-2)! a_{m+1}.
// Growth is single-writer; the table is a plain value and can be copied out
// to readers once extended.
class SequenceTable {
 public:
  explicit SequenceTable(unsigned k);

  unsigned k() const noexcept { return k_; }
  std::size_t size() const noexcept { return values_.size(); }

  void extend_to(std::size_t n);
  // Extends as needed.
  const BigInt& at(std::size_t n);
  const std::vector<BigInt>& values() const noexcept { return values_; }

 private:
  unsigned k_;
  BigInt k_minus_1_factorial_;
  std::vector<BigInt> factorials_;  // factorials_[j] = j!
  std::vector<BigInt> values_;
};

// Process-wide memoized a_n^(k). Throws DomainError for k = 0.
BigInt a_seq(unsigned k, std::size_t n);
// a_0..a_n in one lock acquisition.
std::vector<BigInt> a_seq_prefix(unsigned k, std::size_t n);

// Number of indecomposable permutations of length n, by enumeration.
// 1 <= n <= 10, otherwise DomainError("brute-force cap exceeded").
// Parallel over the first element; the serial variant checks every
// permutation with no pruning and is kept as the reference.
inline constexpr unsigned kBruteForceCap = 10;
BigInt indecomposable_bruteforce(unsigned n);
BigInt indecomposable_bruteforce_serial(unsigned n);

// I_n = n! - sum_{i=1}^{n-1} I_i (n-i)!
BigInt indecomposable_recurrence(unsigned n);

// k x + sum_{n>=1} a_n^(k) x^{n+1}, truncated at `order`.
TruncatedSeries comtet_series(unsigned k, std::size_t order);

struct ComtetVerification {
  unsigned k;
  std::size_t order;
  TruncatedSeries residual;  // (1 - I_k) A_{k-1} - (k-1)!
  bool holds() const { return residual.is_zero(); }
};

ComtetVerification verify_comtet(unsigned k, std::size_t order);

}  // namespace hlx
