#include "unc/cli/csv.hpp"

#include <istream>
#include <iterator>
#include <ostream>

namespace unc::cli {
namespace {

std::string describe(std::size_t row, const std::string& column, const std::string& message) {
  std::string out;
  if (row > 0) out += "row " + std::to_string(row);
  if (!column.empty()) out += (out.empty() ? "" : ", ") + std::string("column '") + column + "'";
  return out.empty() ? message : out + ": " + message;
}

}  // namespace

TableError::TableError(std::size_t row, const std::string& column, const std::string& message)
    : Error(describe(row, column, message)), row_(row), column_(column) {}

CsvDocument read_csv(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};

  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;

  const auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  const auto end_record = [&] {
    end_field();
    // Blank lines are not records.
    if (!(record.size() == 1 && record.front().empty())) records.push_back(std::move(record));
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started) {
          throw TableError(0, "", "line " + std::to_string(line) + ": stray quote in field");
        }
        quoted = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        end_record();
        ++line;
        break;
      case '\n':
        end_record();
        ++line;
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (quoted) throw TableError(0, "", "unterminated quoted field");
  if (field_started || !field.empty() || !record.empty()) end_record();

  if (records.empty()) throw TableError(0, "", "missing header row");
  CsvDocument doc;
  doc.header = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != doc.header.size()) {
      throw TableError(r, "", "expected " + std::to_string(doc.header.size()) +
                                  " fields, found " + std::to_string(records[r].size()));
    }
    doc.rows.push_back(std::move(records[r]));
  }
  return doc;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv_row(std::ostream& out, std::span<const std::string> fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_escape(fields[i]);
  }
  out << "\r\n";
}

}  // namespace unc::cli
