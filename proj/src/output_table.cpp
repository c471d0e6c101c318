#include "hlx/output_table.hpp"

#include "json.hpp"

#include <ostream>
#include <stdexcept>

#include "hlx/format.hpp"

namespace hlx {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string cell_text(const Cell& cell) {
  return std::visit(Overloaded{
                        [](Empty) { return std::string(); },
                        [](std::int64_t v) { return std::to_string(v); },
                        [](std::uint64_t v) { return std::to_string(v); },
                        [](double v) { return format_17g(v); },
                        [](const BigInt& v) { return v.get_str(); },
                        [](const std::string& v) { return v; },
                        [](bool v) { return std::string(v ? "true" : "false"); },
                    },
                    cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  return std::visit(Overloaded{
                        [](Empty) { return nlohmann::ordered_json(nullptr); },
                        [](std::int64_t v) { return nlohmann::ordered_json(v); },
                        [](std::uint64_t v) { return nlohmann::ordered_json(v); },
                        [](double v) { return nlohmann::ordered_json(v); },
                        [](const BigInt& v) {
                          if (v.fits_slong_p()) return nlohmann::ordered_json(v.get_si());
                          return nlohmann::ordered_json(v.get_str());
                        },
                        [](const std::string& v) { return nlohmann::ordered_json(v); },
                        [](bool v) { return nlohmann::ordered_json(v); },
                    },
                    cell);
}

}  // namespace

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

OutputTable::OutputTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void OutputTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw std::invalid_argument("row width mismatch");
  rows_.push_back(std::move(row));
}

void OutputTable::write(std::ostream& out, OutputFormat format) const {
  if (format == OutputFormat::csv) {
    write_csv(out);
  } else {
    write_json(out);
  }
}

void OutputTable::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(columns_[i]);
  }
  out << "\r\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(cell_text(row[i]));
    }
    out << "\r\n";
  }
}

void OutputTable::write_json(std::ostream& out) const {
  nlohmann::ordered_json doc;
  doc["columns"] = columns_;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace hlx
