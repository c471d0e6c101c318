#pragma once

// On-disk sieve bitmap.
//
//   offset  size  field
//   0       9     magic "HLXSIEVE1"
//   9       8     limit, little-endian u64
//   17      8     segment size in bits, little-endian u64
//   25      ...   odd-number bitmap, ceil(((limit+1)/2) / 8) bytes; bit j of
//                 byte b stands for the odd number 2(8b+j)+1
//
// Loading rejects a bad magic, a zero segment size and any length mismatch.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "hlx/sieve.hpp"

namespace hlx {

inline constexpr char kSieveMagic[] = "HLXSIEVE1";

class SieveCacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_sieve(std::ostream& out, const SieveRange& s);
SieveRange read_sieve(std::istream& in);

void save_sieve_cache(const std::filesystem::path& path, const SieveRange& s);
SieveRange load_sieve_cache(const std::filesystem::path& path);

}  // namespace hlx
