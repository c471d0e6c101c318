#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hlx {

// Argument outside the mathematical domain of an operation (x <= 1 for li,
// c_0 = 0 for a reciprocal, composite q for w(q), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request beyond what a computed resource covers (sieve limit, sieve cap).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Offset pattern covers every residue class modulo `witness`.
class InadmissibleError : public std::invalid_argument {
 public:
  InadmissibleError(const std::string& what, std::uint64_t witness)
      : std::invalid_argument(what), witness_(witness) {}
  std::uint64_t witness() const noexcept { return witness_; }

 private:
  std::uint64_t witness_;
};

class NonIntegralError : public std::runtime_error {
 public:
  NonIntegralError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Internal invariant violated; never expected to fire.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hlx
