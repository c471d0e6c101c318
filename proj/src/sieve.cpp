#include "hlx/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "hlx/errors.hpp"
#include "hlx/format.hpp"

namespace hlx {

namespace {

constexpr std::uint64_t words_for_bits(std::uint64_t bits) { return (bits + 63) / 64; }

inline void clear_bit(std::vector<std::uint64_t>& w, std::uint64_t i) {
  w[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

// Odd primes up to sqrt(limit), by a plain sieve.
std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while (root * root > limit) --root;
  while ((root + 1) * (root + 1) <= limit) ++root;
  std::vector<char> composite(root + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 3; i <= root; i += 2) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= root; j += 2 * i) composite[j] = 1;
  }
  return out;
}

void mask_tail(std::vector<std::uint64_t>& words, std::uint64_t bits) {
  if (words.empty()) return;
  const std::uint64_t used = bits & 63;
  if (used) words.back() &= (std::uint64_t{1} << used) - 1;
}

}  // namespace

SieveRange::SieveRange(std::uint64_t limit, std::uint64_t segment_bits,
                       std::vector<std::uint64_t> words)
    : limit_(limit), segment_bits_(segment_bits), words_(std::move(words)) {
  if (words_.size() != words_for_bits(odd_count())) {
    throw DomainError("sieve bitmap length does not match limit");
  }
}

bool SieveRange::is_prime(std::uint64_t n) const {
  if (n > limit_) {
    throw RangeError("primality query " + std::to_string(n) + " beyond sieve limit " +
                     std::to_string(limit_));
  }
  if (n == 2) return true;
  if (n < 2 || n % 2 == 0) return false;
  const std::uint64_t i = n / 2;
  return (words_[i >> 6] >> (i & 63)) & 1;
}

std::uint64_t SieveRange::bits_at(std::uint64_t bit) const noexcept {
  const std::uint64_t w = bit >> 6;
  const unsigned shift = bit & 63;
  if (w >= words_.size()) return 0;
  std::uint64_t lo = words_[w] >> shift;
  if (shift != 0 && w + 1 < words_.size()) lo |= words_[w + 1] << (64 - shift);
  return lo;
}

SieveRange sieve(std::uint64_t limit, SieveOptions options) {
  if (limit < 2) throw DomainError("sieve limit must be >= 2");
  if (limit > options.cap) {
    throw RangeError("sieve limit " + std::to_string(limit) + " exceeds cap " +
                     std::to_string(options.cap) +
                     "; raise it with --sieve-cap or HLX_SIEVE_CAP");
  }
  const std::uint64_t segment_bits =
      std::max<std::uint64_t>(64, (options.segment_bits + 63) / 64 * 64);
  const std::uint64_t bits = (limit + 1) / 2;
  std::vector<std::uint64_t> words(words_for_bits(bits), ~std::uint64_t{0});
  const auto primes = base_primes(limit);
  const auto segments = static_cast<std::int64_t>((bits + segment_bits - 1) / segment_bits);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t seg = 0; seg < segments; ++seg) {
    const std::uint64_t lo = static_cast<std::uint64_t>(seg) * segment_bits;
    const std::uint64_t hi = std::min(bits, lo + segment_bits);
    for (const std::uint32_t p : primes) {
      // First odd multiple of p that is >= max(p*p, 2*lo+1); bit index (m-1)/2.
      const std::uint64_t start_value = std::max<std::uint64_t>(
          std::uint64_t{p} * p, ((2 * lo + 1 + p - 1) / p) * p);
      std::uint64_t m = start_value % 2 == 0 ? start_value + p : start_value;
      std::uint64_t i = (m - 1) / 2;
      if (i >= hi) continue;
      for (; i < hi; i += p) clear_bit(words, i);
    }
  }
  clear_bit(words, 0);  // 1 is not prime
  mask_tail(words, bits);
  return SieveRange(limit, segment_bits, std::move(words));
}

SieveRange sieve_serial(std::uint64_t limit) {
  if (limit < 2) throw DomainError("sieve limit must be >= 2");
  std::vector<char> composite(limit + 1, 0);
  composite[0] = composite[1] = 1;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  const std::uint64_t bits = (limit + 1) / 2;
  std::vector<std::uint64_t> words(words_for_bits(bits), 0);
  for (std::uint64_t i = 0; i < bits; ++i) {
    if (!composite[2 * i + 1]) words[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  return SieveRange(limit, kDefaultSegmentBits, std::move(words));
}

std::uint64_t prime_count(const SieveRange& s, std::uint64_t n) {
  if (n > s.limit()) {
    throw RangeError("prime count at " + std::to_string(n) + " beyond sieve limit " +
                     std::to_string(s.limit()));
  }
  if (n < 2) return 0;
  const std::uint64_t bits = (n + 1) / 2;  // odd numbers <= n
  const auto words = s.words();
  std::uint64_t count = 1;  // the prime 2
  const std::uint64_t full = bits / 64;
  for (std::uint64_t w = 0; w < full; ++w) count += std::popcount(words[w]);
  if (const std::uint64_t rest = bits & 63) {
    count += std::popcount(words[full] & ((std::uint64_t{1} << rest) - 1));
  }
  return count;
}

std::uint64_t prime_count(const SieveRange& s, double x) {
  if (!(x <= static_cast<double>(s.limit()))) {
    throw RangeError("prime count at " + format_shortest(x) + " beyond sieve limit " +
                     std::to_string(s.limit()));
  }
  if (x < 2.0) return 0;
  return prime_count(s, static_cast<std::uint64_t>(std::floor(x)));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  const SieveRange s = sieve(limit, {kDefaultSegmentBits, ~std::uint64_t{0}});
  out.push_back(2);
  const auto words = s.words();
  for (std::uint64_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits) {
      const std::uint64_t i = w * 64 + static_cast<unsigned>(std::countr_zero(bits));
      out.push_back(2 * i + 1);
      bits &= bits - 1;
    }
  }
  return out;
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace hlx
