#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unc/cli/csv.hpp"
#include "unc/core.hpp"
#include "unc/expr.hpp"

namespace unc::cli {

enum class ColumnKind { text, numeric, uncertain };

/// A named column. Numeric and uncertain columns keep their data in `data`
/// (numeric ones with zero errors); text columns keep raw cells in `text`.
struct Column {
  std::string name;
  ColumnKind kind = ColumnKind::text;
  std::vector<std::string> text;
  UncertainVector data;

  std::size_t size() const { return kind == ColumnKind::text ? text.size() : data.size(); }
};

class Table {
 public:
  explicit Table(std::size_t rows = 0) : rows_(rows) {}

  std::size_t rows() const noexcept { return rows_; }
  const std::vector<Column>& columns() const noexcept { return columns_; }

  /// Appends, or replaces a column of the same name in place. Throws
  /// TableError on a row-count mismatch.
  void set_column(Column column);

  const Column* find(std::string_view name) const;
  /// Throws TableError when absent.
  const Column& at(std::string_view name) const;

 private:
  std::size_t rows_;
  std::vector<Column> columns_;
};

/// Builds a table, classifying each column: numeric when every cell is a
/// bare numeral (empty and "NA" cells read as NaN), uncertain when every
/// cell parses as a measurement and at least one uses uncertainty notation
/// such as "5.00(5)" or "5 ± 0.05", text otherwise. Duplicate header names
/// throw TableError.
Table table_from_csv(const CsvDocument& doc);

/// How a column gets its uncertainties.
///   "abs:0.05" or "0.05"   same absolute uncertainty for every row
///   "rel:0.02" or "2%"     fraction of |value|
///   "col:x_err"            taken from another numeric column
///   "expr:x/30" or "x/30"  numeric expression evaluated per row
struct ErrorSpec {
  enum class Kind { absolute, relative, column, expression };
  Kind kind = Kind::absolute;
  double amount = 0.0;
  std::string column;
  ExprPtr expression;
};

/// Throws InvalidArgument on malformed specs (ParseError/LexError for "expr:").
ErrorSpec parse_error_spec(std::string_view spec);

/// Replaces the uncertainties of a numeric or uncertain column.
void attach_errors(Table& table, std::string_view column, const ErrorSpec& spec);

/// Applies `spec` to every numeric column.
void attach_errors_all(Table& table, const ErrorSpec& spec);

/// Evaluates `expr` row by row with eval_uncertain and stores it as an
/// uncertain column. Rows evaluate independently and in parallel; output
/// order follows row order.
void derive_column(Table& table, const std::string& name, const Expr& expr);

}  // namespace unc::cli
