#include "hlx/number_parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "hlx/exact_series.hpp"

namespace hlx {

std::uint64_t parse_count(std::string_view text) {
  const std::string s(text);
  const auto bad = [&s]() { return std::invalid_argument("not a non-negative integer: '" + s + "'"); };
  if (s.empty()) throw bad();

  std::string mantissa = s;
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = s.substr(0, e);
    const std::string exp_text = s.substr(e + 1);
    const char* first = exp_text.data();
    if (!exp_text.empty() && exp_text[0] == '+') ++first;
    const char* last = exp_text.data() + exp_text.size();
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last || first == last) throw bad();
    if (exponent > 40 || exponent < -40) throw bad();
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_point) ++fraction_digits;
    } else {
      throw bad();
    }
  }
  if (digits.empty()) throw bad();

  ExactRational value{BigInt(digits)};
  const long shift = exponent - fraction_digits;
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  if (shift >= 0) {
    value *= ten_pow;
  } else {
    value /= ten_pow;
  }
  value.canonicalize();
  if (value.get_den() != 1) throw bad();
  const BigInt& n = value.get_num();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) throw bad();
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

double parse_real(std::string_view text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last || !std::isfinite(v)) {
    throw std::invalid_argument("not a real number: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace hlx
