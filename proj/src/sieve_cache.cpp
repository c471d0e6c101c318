#include "hlx/sieve_cache.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

namespace hlx {

namespace {

constexpr std::size_t kMagicSize = sizeof(kSieveMagic) - 1;

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), b.size());
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), b.size())) {
    throw SieveCacheError("sieve cache: truncated header");
  }
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

std::uint64_t bitmap_bytes(std::uint64_t limit) { return ((limit + 1) / 2 + 7) / 8; }

}  // namespace

void write_sieve(std::ostream& out, const SieveRange& s) {
  out.write(kSieveMagic, kMagicSize);
  put_u64(out, s.limit());
  put_u64(out, s.segment_bits());
  const std::uint64_t n = bitmap_bytes(s.limit());
  std::vector<char> bytes(n);
  const auto words = s.words();
  for (std::uint64_t i = 0; i < n; ++i) {
    bytes[i] = static_cast<char>((words[i / 8] >> (8 * (i % 8))) & 0xff);
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw SieveCacheError("sieve cache: write failed");
}

SieveRange read_sieve(std::istream& in) {
  std::array<char, kMagicSize> magic{};
  if (!in.read(magic.data(), magic.size()) ||
      std::memcmp(magic.data(), kSieveMagic, kMagicSize) != 0) {
    throw SieveCacheError("sieve cache: bad magic");
  }
  const std::uint64_t limit = get_u64(in);
  const std::uint64_t segment_bits = get_u64(in);
  if (limit < 2 || segment_bits == 0) throw SieveCacheError("sieve cache: invalid header");
  const std::uint64_t n = bitmap_bytes(limit);
  std::vector<unsigned char> bytes(n);
  if (!in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(n))) {
    throw SieveCacheError("sieve cache: bitmap shorter than header claims");
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw SieveCacheError("sieve cache: trailing bytes after bitmap");
  }
  const std::uint64_t bits = (limit + 1) / 2;
  std::vector<std::uint64_t> words((bits + 63) / 64, 0);
  for (std::uint64_t i = 0; i < n; ++i) words[i / 8] |= std::uint64_t{bytes[i]} << (8 * (i % 8));
  if (bits % 64 != 0 && (words.back() >> (bits % 64)) != 0) {
    throw SieveCacheError("sieve cache: bits set past limit");
  }
  return SieveRange(limit, segment_bits, std::move(words));
}

void save_sieve_cache(const std::filesystem::path& path, const SieveRange& s) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SieveCacheError("sieve cache: cannot open " + path.string());
  write_sieve(out, s);
}

SieveRange load_sieve_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SieveCacheError("sieve cache: cannot open " + path.string());
  return read_sieve(in);
}

}  // namespace hlx
