#include "hlx/sequences.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "hlx/errors.hpp"

namespace hlx {

BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

SequenceTable::SequenceTable(unsigned k) : k_(k) {
  if (k == 0) throw DomainError("sequence index k must be >= 1");
  k_minus_1_factorial_ = factorial(k - 1);
  factorials_.push_back(1);
  values_.push_back(1);
}

void SequenceTable::extend_to(std::size_t n) {
  while (factorials_.size() <= n + k_) {
    factorials_.push_back(factorials_.back() * static_cast<unsigned long>(factorials_.size()));
  }
  BigInt rhs, q;
  for (std::size_t i = values_.size(); i <= n; ++i) {
    rhs = factorials_[i + k_] - k_ * factorials_[i + k_ - 1];
    // m runs 0..i-2, so (i-m+k-2) >= k >= 1.
    for (std::size_t m = 0; m + 2 <= i; ++m) rhs -= factorials_[i - m + k_ - 2] * values_[m + 1];
    if (!mpz_divisible_p(rhs.get_mpz_t(), k_minus_1_factorial_.get_mpz_t())) {
      throw ConsistencyError("inexact division by (k-1)! at k=" + std::to_string(k_) +
                             ", n=" + std::to_string(i));
    }
    mpz_divexact(q.get_mpz_t(), rhs.get_mpz_t(), k_minus_1_factorial_.get_mpz_t());
    values_.push_back(q);
  }
}

const BigInt& SequenceTable::at(std::size_t n) {
  extend_to(n);
  return values_[n];
}

namespace {

std::mutex g_tables_mutex;
std::map<unsigned, SequenceTable>& tables() {
  static std::map<unsigned, SequenceTable> t;
  return t;
}

SequenceTable& table_for(unsigned k) {
  auto& t = tables();
  auto it = t.find(k);
  if (it == t.end()) it = t.emplace(k, SequenceTable(k)).first;
  return it->second;
}

}  // namespace

BigInt a_seq(unsigned k, std::size_t n) {
  if (k == 0) throw DomainError("sequence index k must be >= 1");
  std::lock_guard lock(g_tables_mutex);
  return table_for(k).at(n);
}

std::vector<BigInt> a_seq_prefix(unsigned k, std::size_t n) {
  if (k == 0) throw DomainError("sequence index k must be >= 1");
  std::lock_guard lock(g_tables_mutex);
  auto& table = table_for(k);
  table.extend_to(n);
  const auto& v = table.values();
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n + 1)};
}

namespace {

void check_bruteforce_range(unsigned n) {
  if (n == 0) throw DomainError("permutation length must be >= 1");
  if (n > kBruteForceCap) throw DomainError("brute-force cap exceeded");
}

// First j in [1, n) such that perm[0..j) is a permutation of 0..j-1, or 0.
unsigned first_decomposition(const std::vector<unsigned>& perm) {
  unsigned prefix_max = 0;
  for (unsigned j = 1; j < perm.size(); ++j) {
    prefix_max = std::max(prefix_max, perm[j - 1]);
    if (prefix_max == j - 1) return j;
  }
  return 0;
}

// Indecomposable permutations of 0..n-1 that start with `first`.
// A decomposable prefix of length j rules out every permutation sharing it,
// so the suffix is put in its last lexicographic order before stepping.
std::uint64_t count_with_first(unsigned n, unsigned first) {
  if (n == 1) return 1;
  if (first == 0) return 0;
  std::vector<unsigned> perm;
  perm.reserve(n);
  perm.push_back(first);
  for (unsigned v = 0; v < n; ++v)
    if (v != first) perm.push_back(v);

  std::uint64_t count = 0;
  do {
    const unsigned j = first_decomposition(perm);
    if (j == 0) {
      ++count;
    } else {
      std::sort(perm.begin() + j, perm.end(), std::greater<>());
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return count;
}

}  // namespace

BigInt indecomposable_bruteforce(unsigned n) {
  check_bruteforce_range(n);
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (int first = 0; first < static_cast<int>(n); ++first) {
    total += count_with_first(n, static_cast<unsigned>(first));
  }
  return BigInt(static_cast<unsigned long>(total));
}

BigInt indecomposable_bruteforce_serial(unsigned n) {
  check_bruteforce_range(n);
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::uint64_t count = 0;
  do {
    if (first_decomposition(perm) == 0) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return BigInt(static_cast<unsigned long>(count));
}

BigInt indecomposable_recurrence(unsigned n) {
  if (n == 0) throw DomainError("permutation length must be >= 1");
  std::vector<BigInt> fact(n + 1);
  fact[0] = 1;
  for (unsigned i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<BigInt> counts(n + 1);
  for (unsigned m = 1; m <= n; ++m) {
    counts[m] = fact[m];
    for (unsigned i = 1; i < m; ++i) counts[m] -= counts[i] * fact[m - i];
  }
  return counts[n];
}

TruncatedSeries comtet_series(unsigned k, std::size_t order) {
  if (k == 0) throw DomainError("sequence index k must be >= 1");
  std::vector<ExactRational> coeffs(order + 1);
  if (order >= 1) {
    coeffs[1] = k;
    const auto a = a_seq_prefix(k, order - 1);
    for (std::size_t n = 1; n + 1 <= order; ++n) coeffs[n + 1] = a[n];
  }
  return TruncatedSeries::from_coeffs(std::move(coeffs));
}

ComtetVerification verify_comtet(unsigned k, std::size_t order) {
  const auto one = TruncatedSeries::constant(1, order);
  const auto lhs = (one - comtet_series(k, order)) * make_A_series(k - 1, order);
  auto residual = lhs - TruncatedSeries::constant(ExactRational(factorial(k - 1)), order);
  return {k, order, std::move(residual)};
}

}  // namespace hlx
