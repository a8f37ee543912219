#include "unc/cli/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <unordered_set>

#include "unc/format.hpp"

namespace unc::cli {
namespace {

bool is_missing(std::string_view cell) { return cell.empty() || cell == "NA"; }

bool has_uncertainty_notation(std::string_view cell) {
  return cell.find('(') != std::string_view::npos || cell.find("±") != std::string_view::npos ||
         cell.find("+-") != std::string_view::npos || cell.find("+/-") != std::string_view::npos;
}

std::optional<double> plain_number(std::string_view cell) {
  while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
  while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') cell.remove_prefix(1);
  double out = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), out);
  if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) return std::nullopt;
  return out;
}

Column classify(const std::string& name, std::vector<std::string> cells) {
  Column col;
  col.name = name;

  std::vector<double> values(cells.size());
  bool numeric = true;
  for (std::size_t i = 0; i < cells.size() && numeric; ++i) {
    if (is_missing(cells[i])) {
      values[i] = std::numeric_limits<double>::quiet_NaN();
    } else if (auto v = plain_number(cells[i])) {
      values[i] = *v;
    } else {
      numeric = false;
    }
  }
  if (numeric) {
    col.kind = ColumnKind::numeric;
    col.data = UncertainVector::exact(std::move(values));
    return col;
  }

  std::vector<double> errors(cells.size());
  bool notation = false;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (is_missing(cells[i])) {
      values[i] = std::numeric_limits<double>::quiet_NaN();
      errors[i] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    try {
      const auto m = parse_value(cells[i]);
      values[i] = m.value;
      errors[i] = m.error;
      notation = notation || has_uncertainty_notation(cells[i]);
    } catch (const ParseError&) {
      col.kind = ColumnKind::text;
      col.text = std::move(cells);
      return col;
    }
  }
  if (!notation) {
    col.kind = ColumnKind::text;
    col.text = std::move(cells);
    return col;
  }
  col.kind = ColumnKind::uncertain;
  try {
    col.data = UncertainVector(std::move(values), std::move(errors));
  } catch (const Error& e) {
    throw TableError(0, name, e.what());
  }
  return col;
}

double parse_amount(std::string_view text, std::string_view spec) {
  double out = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw InvalidArgument("malformed error spec '" + std::string(spec) + "'");
  }
  if (!(out >= 0.0) || std::isinf(out)) {
    throw InvalidArgument("error spec '" + std::string(spec) + "' must be finite and >= 0");
  }
  return out;
}

bool is_amount(std::string_view text) {
  double out = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return !text.empty() && res.ptr == text.data() + text.size();
}

const Column& require_measurement(const Table& table, std::string_view name) {
  const Column& col = table.at(name);
  if (col.kind == ColumnKind::text) {
    throw TableError(0, std::string(name), "not a numeric column");
  }
  return col;
}

}  // namespace

void Table::set_column(Column column) {
  if (column.size() != rows_) {
    throw TableError(0, column.name,
                     "has " + std::to_string(column.size()) + " rows, table has " +
                         std::to_string(rows_));
  }
  for (auto& existing : columns_) {
    if (existing.name == column.name) {
      existing = std::move(column);
      return;
    }
  }
  columns_.push_back(std::move(column));
}

const Column* Table::find(std::string_view name) const {
  for (const auto& c : columns_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const Column& Table::at(std::string_view name) const {
  if (const Column* c = find(name)) return *c;
  throw TableError(0, std::string(name), "no such column");
}

Table table_from_csv(const CsvDocument& doc) {
  std::unordered_set<std::string> seen;
  for (const auto& h : doc.header) {
    if (!seen.insert(h).second) throw TableError(0, h, "duplicate column name");
  }
  Table table(doc.rows.size());
  for (std::size_t c = 0; c < doc.header.size(); ++c) {
    std::vector<std::string> cells;
    cells.reserve(doc.rows.size());
    for (const auto& row : doc.rows) cells.push_back(row[c]);
    table.set_column(classify(doc.header[c], std::move(cells)));
  }
  return table;
}

ErrorSpec parse_error_spec(std::string_view spec) {
  ErrorSpec out;
  const auto prefixed = [&](std::string_view p) { return spec.substr(0, p.size()) == p; };
  if (prefixed("abs:")) {
    out.kind = ErrorSpec::Kind::absolute;
    out.amount = parse_amount(spec.substr(4), spec);
  } else if (prefixed("rel:")) {
    out.kind = ErrorSpec::Kind::relative;
    out.amount = parse_amount(spec.substr(4), spec);
  } else if (prefixed("col:")) {
    out.kind = ErrorSpec::Kind::column;
    out.column = std::string(spec.substr(4));
    if (out.column.empty()) throw InvalidArgument("error spec 'col:' needs a column name");
  } else if (prefixed("expr:")) {
    out.kind = ErrorSpec::Kind::expression;
    out.expression = parse(spec.substr(5));
  } else if (!spec.empty() && spec.back() == '%') {
    out.kind = ErrorSpec::Kind::relative;
    out.amount = parse_amount(spec.substr(0, spec.size() - 1), spec) / 100.0;
  } else if (is_amount(spec)) {
    out.kind = ErrorSpec::Kind::absolute;
    out.amount = parse_amount(spec, spec);
  } else {
    // Anything else is a row expression, e.g. "x/30" or a bare column name.
    out.kind = ErrorSpec::Kind::expression;
    out.expression = parse(spec);
  }
  return out;
}

void attach_errors(Table& table, std::string_view column, const ErrorSpec& spec) {
  const Column& target = require_measurement(table, column);
  const std::size_t n = table.rows();
  const auto values = target.data.values();
  std::vector<double> errors(n);

  switch (spec.kind) {
    case ErrorSpec::Kind::absolute:
      std::fill(errors.begin(), errors.end(), spec.amount);
      break;
    case ErrorSpec::Kind::relative:
      for (std::size_t i = 0; i < n; ++i) errors[i] = std::fabs(values[i]) * spec.amount;
      break;
    case ErrorSpec::Kind::column: {
      const Column& source = require_measurement(table, spec.column);
      for (std::size_t i = 0; i < n; ++i) errors[i] = source.data.values()[i];
      break;
    }
    case ErrorSpec::Kind::expression: {
      const auto names = free_variables(*spec.expression);
      std::vector<const Column*> inputs;
      for (const auto& name : names) inputs.push_back(&require_measurement(table, name));
      const BoundExpr program(*spec.expression, names);
      std::vector<double> row(names.size());
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < inputs.size(); ++k) row[k] = inputs[k]->data.values()[i];
        errors[i] = program.eval(row);
      }
      break;
    }
  }

  Column updated = target;
  updated.kind = ColumnKind::uncertain;
  try {
    updated.data = UncertainVector({values.begin(), values.end()}, std::move(errors));
  } catch (const Error& e) {
    throw TableError(0, std::string(column), e.what());
  }
  table.set_column(std::move(updated));
}

void attach_errors_all(Table& table, const ErrorSpec& spec) {
  std::vector<std::string> targets;
  for (const auto& c : table.columns()) {
    if (c.kind == ColumnKind::numeric) targets.push_back(c.name);
  }
  for (const auto& name : targets) attach_errors(table, name, spec);
}

void derive_column(Table& table, const std::string& name, const Expr& expr) {
  const auto names = free_variables(expr);
  std::vector<const Column*> inputs;
  for (const auto& var : names) {
    const Column* c = table.find(var);
    if (c == nullptr) throw UnboundVariable(var);
    if (c->kind == ColumnKind::text) throw TableError(0, var, "not a numeric column");
    inputs.push_back(c);
  }

  const std::size_t n = table.rows();
  std::vector<double> values(n);
  std::vector<double> errors(n);
  std::exception_ptr failure;
#pragma omp parallel for schedule(static) if (n >= 1024)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    try {
      UncertainEnv env;
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        env.emplace(names[k], inputs[k]->data[static_cast<std::size_t>(i)]);
      }
      const auto r = eval_uncertain(expr, env);
      values[i] = r.value;
      errors[i] = r.error;
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  Column out;
  out.name = name;
  out.kind = ColumnKind::uncertain;
  out.data = UncertainVector::assume_valid(std::move(values), std::move(errors));
  table.set_column(std::move(out));
}

}  // namespace unc::cli
