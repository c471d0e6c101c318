#pragma once

// Tabular command output as CSV (RFC 4180) or JSON.
//
// CSV always has a header row; doubles use 17 significant digits and exact
// integers are printed in full. JSON is {"columns": [...], "rows": [{...}]}
// with the same cells: exact integers wider than 64 bits become decimal
// strings.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "hlx/exact_series.hpp"

namespace hlx {

enum class OutputFormat { csv, json };

struct Empty {};
using Cell = std::variant<Empty, std::int64_t, std::uint64_t, double, BigInt, std::string, bool>;

class OutputTable {
 public:
  explicit OutputTable(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

  // Throws std::invalid_argument when the width does not match.
  void add_row(std::vector<Cell> row);

  void write(std::ostream& out, OutputFormat format) const;
  void write_csv(std::ostream& out) const;
  void write_json(std::ostream& out) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

std::string csv_escape(const std::string& field);

}  // namespace hlx
