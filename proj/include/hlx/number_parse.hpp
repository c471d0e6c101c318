#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hlx {

// "1e7", "2.5e3", "100" -> exact non-negative integer. Rejects fractions,
// signs and values beyond u64 with std::invalid_argument.
std::uint64_t parse_count(std::string_view text);

// Finite real, scientific notation allowed.
double parse_real(std::string_view text);

std::vector<std::string> split_list(std::string_view text, char sep = ',');

}  // namespace hlx
