#pragma once

// Minimal RFC 4180 reader/writer: quoted fields, doubled quotes, CRLF or LF
// line ends, header row required.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unc/error.hpp"

namespace unc::cli {

/// Malformed input or a table-level problem; `row` is 1-based over data rows
/// (0 for the header or no specific row).
class TableError : public Error {
 public:
  TableError(std::size_t row, const std::string& column, const std::string& message);
  std::size_t row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::string column_;
};

struct CsvDocument {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Throws TableError on a missing header, ragged rows or an unterminated quote.
CsvDocument read_csv(std::istream& in);

std::string csv_escape(std::string_view field);
void write_csv_row(std::ostream& out, std::span<const std::string> fields);

}  // namespace unc::cli
