#pragma once

// Odd-only segmented sieve of Eratosthenes.
//
// Bit i of the store represents the odd number 2i+1; 2 is handled
// separately. Segments are a multiple of 64 bits so that parallel segment
// workers never share a word.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hlx {

inline constexpr std::uint64_t kDefaultSieveCap = 1'000'000'000ULL;
inline constexpr std::uint64_t kDefaultSegmentBits = std::uint64_t{1} << 20;

struct SieveOptions {
  std::uint64_t segment_bits = kDefaultSegmentBits;
  std::uint64_t cap = kDefaultSieveCap;
};

class SieveRange {
 public:
  // Takes ownership of an odd-number bitmap covering [1, limit].
  SieveRange(std::uint64_t limit, std::uint64_t segment_bits, std::vector<std::uint64_t> words);

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t segment_bits() const noexcept { return segment_bits_; }
  // Number of odd integers in [1, limit].
  std::uint64_t odd_count() const noexcept { return (limit_ + 1) / 2; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  // n <= limit; RangeError otherwise.
  bool is_prime(std::uint64_t n) const;
  // 64 odd-number bits starting at bit index `bit`; bits past the store are 0.
  std::uint64_t bits_at(std::uint64_t bit) const noexcept;

  friend bool operator==(const SieveRange&, const SieveRange&) = default;

 private:
  std::uint64_t limit_;
  std::uint64_t segment_bits_;
  std::vector<std::uint64_t> words_;
};

// Throws DomainError for limit < 2 and RangeError when limit exceeds
// options.cap.
SieveRange sieve(std::uint64_t limit, SieveOptions options = {});

// Unsegmented byte-per-integer sieve, single-threaded. Reference for tests
// and the benchmark; same output representation as sieve().
SieveRange sieve_serial(std::uint64_t limit);

// pi(floor(x)). RangeError when x > limit.
std::uint64_t prime_count(const SieveRange& s, double x);
std::uint64_t prime_count(const SieveRange& s, std::uint64_t n);

// Primes up to `limit` as a list (small limits; used for singular series).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

bool is_prime_trial(std::uint64_t n);

}  // namespace hlx
