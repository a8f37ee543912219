#include "unc/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "unc/cli/csv.hpp"
#include "unc/cli/svg.hpp"
#include "unc/cli/table.hpp"
#include "unc/expr.hpp"
#include "unc/mc.hpp"
#include "unc/summaries.hpp"

namespace unc::cli {
namespace {

using json = nlohmann::ordered_json;

std::string shortest(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v < 0 ? "-Inf" : "Inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Seven significant digits, trailing zeros dropped.
std::string report_number(double v) {
  if (!std::isfinite(v)) return shortest(v);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 7);
  return std::string(buf, res.ptr);
}

std::pair<std::string, std::string> split_assignment(const std::string& s, const char* what) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw InvalidArgument(std::string("expected ") + what + ", got '" + s + "'");
  }
  return {s.substr(0, eq), s.substr(eq + 1)};
}

UncertainEnv parse_vars(const std::vector<std::string>& vars) {
  UncertainEnv env;
  for (const auto& v : vars) {
    auto [name, spec] = split_assignment(v, "name=value");
    try {
      env[name] = parse_value(spec);
    } catch (const ParseError& e) {
      throw InvalidArgument("variable " + name + ": " + e.what());
    }
    if (env[name].error < 0.0) throw NegativeError("variable " + name + ": negative uncertainty");
  }
  return env;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "unc: " << e.what() << "\n";
    return kExitUser;
  } catch (const std::exception& e) {
    err << "unc: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

json measurement_json(UncertainScalar m, const Notation& n) {
  json j;
  j["value"] = m.value;
  j["error"] = m.error;
  j["formatted"] = format_value(m, n);
  return j;
}

Table load_table(const std::string& input, std::istream& in) {
  if (input == "-") return table_from_csv(read_csv(in));
  std::ifstream file(input, std::ios::binary);
  if (!file) throw TableError(0, "", "cannot open '" + input + "'");
  return table_from_csv(read_csv(file));
}

void apply_error_specs(Table& table, const std::optional<std::string>& all,
                       const std::vector<std::string>& specs) {
  if (all) attach_errors_all(table, parse_error_spec(*all));
  for (const auto& s : specs) {
    auto [column, spec] = split_assignment(s, "column=spec");
    attach_errors(table, column, parse_error_spec(spec));
  }
}

std::string cell(const Column& c, std::size_t row, const Notation& n) {
  switch (c.kind) {
    case ColumnKind::text: return c.text[row];
    case ColumnKind::numeric: return shortest(c.data.values()[row]);
    case ColumnKind::uncertain: return format_value(c.data[row], n);
  }
  return {};
}

// Terminal columns: count code points, not bytes.
std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++w;
  }
  return w;
}

void write_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) widths[c] = std::max(widths[c], display_width(r[c]));
  }
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c > 0) out << ' ';
      out << std::string(widths[c] - display_width(r[c]), ' ') << r[c];
    }
    out << '\n';
  }
}

void write_table(const Table& table, const CliConfig& cfg, std::ostream& out) {
  const auto& cols = table.columns();
  if (cfg.format == OutputFormat::json) {
    json rows = json::array();
    for (std::size_t r = 0; r < table.rows(); ++r) {
      json row = json::object();
      for (const auto& c : cols) {
        switch (c.kind) {
          case ColumnKind::text: row[c.name] = c.text[r]; break;
          case ColumnKind::numeric: row[c.name] = c.data.values()[r]; break;
          case ColumnKind::uncertain: row[c.name] = measurement_json(c.data[r], cfg.notation); break;
        }
      }
      rows.push_back(std::move(row));
    }
    out << rows.dump(2) << "\n";
    return;
  }

  std::vector<std::string> header;
  for (const auto& c : cols) header.push_back(c.name);
  if (cfg.format == OutputFormat::csv) {
    write_csv_row(out, header);
    for (std::size_t r = 0; r < table.rows(); ++r) {
      std::vector<std::string> fields;
      for (const auto& c : cols) fields.push_back(cell(c, r, cfg.notation));
      write_csv_row(out, fields);
    }
    return;
  }

  if (table.rows() == 0) return;
  std::vector<std::vector<std::string>> grid{header};
  for (std::size_t r = 0; r < table.rows(); ++r) {
    std::vector<std::string> fields;
    for (const auto& c : cols) fields.push_back(cell(c, r, cfg.notation));
    grid.push_back(std::move(fields));
  }
  write_aligned(out, grid);
}

UncertainScalar summarize_one(const std::string& spec, const Table& table) {
  const auto open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')') {
    throw InvalidArgument("expected fn(column) in --summarize, got '" + spec + "'");
  }
  const std::string fn = spec.substr(0, open);
  const std::string name = spec.substr(open + 1, spec.size() - open - 2);
  const Column& col = table.at(name);
  if (col.kind == ColumnKind::text) throw TableError(0, name, "not a numeric column");
  if (fn == "mean") return mean(col.data);
  if (fn == "median") return median(col.data);
  if (fn == "sum") return sum(col.data);
  if (fn == "prod") return prod(col.data);
  if (fn == "min") return min(col.data);
  if (fn == "max") return max(col.data);
  throw InvalidArgument("unknown summary '" + fn + "' (mean, median, sum, prod, min, max)");
}

void write_summaries(const std::vector<std::string>& specs, const Table& table,
                     const CliConfig& cfg, std::ostream& out) {
  std::vector<std::pair<std::string, UncertainScalar>> results;
  for (const auto& s : specs) results.emplace_back(s, summarize_one(s, table));

  if (cfg.format == OutputFormat::json) {
    json arr = json::array();
    for (const auto& [name, m] : results) {
      json j = measurement_json(m, cfg.notation);
      j["summary"] = name;
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
  } else if (cfg.format == OutputFormat::csv) {
    write_csv_row(out, std::vector<std::string>{"summary", "value", "error", "formatted"});
    for (const auto& [name, m] : results) {
      write_csv_row(out, std::vector<std::string>{name, shortest(m.value), shortest(m.error),
                                                  format_value(m, cfg.notation)});
    }
  } else {
    std::vector<std::vector<std::string>> grid;
    for (const auto& [name, m] : results) grid.push_back({name, format_value(m, cfg.notation)});
    write_aligned(out, grid);
  }
}

}  // namespace

std::optional<std::string> process_env(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) return std::string(v);
  return std::nullopt;
}

CliConfig resolve_config(const std::optional<std::string>& notation,
                         const std::optional<int>& digits, const std::string& format,
                         const EnvLookup& env) {
  CliConfig cfg;
  if (notation) {
    cfg.notation.style = notation_from_name(*notation);
  } else if (auto v = env("UNC_NOTATION")) {
    cfg.notation.style = notation_from_name(*v);
  }
  if (digits) {
    cfg.notation.digits = *digits;
  } else if (auto v = env("UNC_DIGITS")) {
    int parsed = 0;
    const auto res = std::from_chars(v->data(), v->data() + v->size(), parsed);
    if (res.ec != std::errc{} || res.ptr != v->data() + v->size()) {
      throw InvalidArgument("UNC_DIGITS must be an integer, got '" + *v + "'");
    }
    cfg.notation.digits = parsed;
  }
  if (cfg.notation.digits < 1) throw InvalidArgument("digits must be at least 1");
  if (format == "text") {
    cfg.format = OutputFormat::text;
  } else if (format == "csv") {
    cfg.format = OutputFormat::csv;
  } else if (format == "json") {
    cfg.format = OutputFormat::json;
  } else {
    throw InvalidArgument("unknown output format '" + format + "' (text, csv, json)");
  }
  return cfg;
}

int cmd_eval(const EvalRequest& req, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const UncertainEnv env = parse_vars(req.vars);
    const ExprAst ast = parse(req.expression);
    const UncertainScalar r = eval_uncertain(*ast, env);
    switch (cfg.format) {
      case OutputFormat::text: out << format_value(r, cfg.notation) << "\n"; break;
      case OutputFormat::csv:
        write_csv_row(out, std::vector<std::string>{"value", "error", "formatted"});
        write_csv_row(out, std::vector<std::string>{shortest(r.value), shortest(r.error),
                                                    format_value(r, cfg.notation)});
        break;
      case OutputFormat::json: out << measurement_json(r, cfg.notation).dump() << "\n"; break;
    }
    return kExitOk;
  });
}

int cmd_table(const TableRequest& req, const CliConfig& cfg, std::istream& in, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    Table table = load_table(req.input, in);
    apply_error_specs(table, req.error_all, req.errors);
    for (const auto& d : req.derive) {
      auto [name, expr] = split_assignment(d, "name=expression");
      derive_column(table, name, *parse(expr));
    }
    if (!req.summarize.empty()) {
      write_summaries(req.summarize, table, cfg, out);
    } else {
      write_table(table, cfg, out);
    }
    return kExitOk;
  });
}

int cmd_mc(const McRequest& req, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const UncertainEnv env = parse_vars(req.vars);
    const ExprAst ast = parse(req.expression);
    McConfig mc;
    mc.samples = req.samples;
    mc.seed = req.seed;
    mc.quantiles = req.quantiles;
    const TsmMcmReport rep = compare_tsm_mcm(*ast, env, mc);

    if (cfg.format == OutputFormat::json) {
      json j;
      j["expression"] = req.expression;
      j["samples"] = mc.samples;
      j["seed"] = mc.seed;
      j["tsm"] = measurement_json(rep.tsm, cfg.notation);
      json m;
      m["mean"] = rep.mcm.mean;
      m["sd"] = rep.mcm.sd;
      m["median"] = rep.mcm.median;
      m["mad"] = rep.mcm.mad;
      json q = json::object();
      for (std::size_t i = 0; i < mc.quantiles.size(); ++i) {
        q[report_number(mc.quantiles[i])] = rep.mcm.quantile_values[i];
      }
      m["quantiles"] = std::move(q);
      m["used"] = rep.mcm.used;
      m["non_finite"] = rep.mcm.non_finite;
      j["mcm"] = std::move(m);
      j["relative_gap"] = rep.relative_gap;
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    std::vector<std::vector<std::string>> rows{
        {"expression", render(*ast)},
        {"samples", std::to_string(mc.samples)},
        {"seed", std::to_string(mc.seed)},
        {"tsm", format_value(rep.tsm, cfg.notation)},
        {"tsm_value", report_number(rep.tsm.value)},
        {"tsm_sd", report_number(rep.tsm.error)},
        {"mcm_mean", report_number(rep.mcm.mean)},
        {"mcm_sd", report_number(rep.mcm.sd)},
        {"mcm_median", report_number(rep.mcm.median)},
        {"mcm_mad", report_number(rep.mcm.mad)},
    };
    for (std::size_t i = 0; i < mc.quantiles.size(); ++i) {
      rows.push_back({"mcm_q" + report_number(mc.quantiles[i]),
                      report_number(rep.mcm.quantile_values[i])});
    }
    rows.push_back({"non_finite", std::to_string(rep.mcm.non_finite)});
    rows.push_back({"relative_gap", report_number(rep.relative_gap)});

    if (cfg.format == OutputFormat::csv) {
      write_csv_row(out, std::vector<std::string>{"key", "value"});
      for (const auto& r : rows) write_csv_row(out, r);
    } else {
      for (const auto& r : rows) {
        out << r[0] << std::string(14 - std::min<std::size_t>(13, r[0].size()), ' ') << r[1]
            << "\n";
      }
    }
    return kExitOk;
  });
}

int cmd_plot(const PlotRequest& req, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Table table = load_table(req.input, in);
    apply_error_specs(table, req.error_all, req.errors);
    const Column& xc = table.at(req.x);
    const Column& yc = table.at(req.y);
    if (xc.kind == ColumnKind::text) throw TableError(0, req.x, "not a numeric column");
    if (yc.kind == ColumnKind::text) throw TableError(0, req.y, "not a numeric column");
    const Column* gc = req.group ? &table.at(*req.group) : nullptr;

    ScatterPlot plot;
    plot.x_label = req.x;
    plot.y_label = req.y;
    const Notation plain;
    std::size_t skipped = 0;
    for (std::size_t r = 0; r < table.rows(); ++r) {
      PlotPoint p{xc.data[r], yc.data[r], 0};
      if (gc != nullptr) {
        const std::string key = cell(*gc, r, plain);
        const auto it = std::find(plot.groups.begin(), plot.groups.end(), key);
        p.group = static_cast<std::size_t>(it - plot.groups.begin());
        if (it == plot.groups.end()) plot.groups.push_back(key);
      }
      if (!std::isfinite(p.x.value) || !std::isfinite(p.y.value) || !std::isfinite(p.x.error) ||
          !std::isfinite(p.y.error)) {
        ++skipped;
      }
      plot.points.push_back(p);
    }
    if (skipped > 0) err << "unc: skipped " << skipped << " rows with non-finite coordinates\n";

    const std::string svg = render_svg(plot);
    if (req.output == "-") {
      out << svg;
    } else {
      std::ofstream file(req.output, std::ios::binary);
      if (!file) throw TableError(0, "", "cannot write '" + req.output + "'");
      file << svg;
      if (!file) throw TableError(0, "", "write failed for '" + req.output + "'");
    }
    return kExitOk;
  });
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err, const EnvLookup& env) {
  CLI::App app{"Measurements with standard uncertainty: evaluate, tabulate, cross-check, plot.",
               "unc"};
  app.require_subcommand(1);

  struct Common {
    std::optional<std::string> notation;
    std::optional<int> digits;
    std::string format = "text";
  };
  const auto add_common = [](CLI::App* sub, Common& c) {
    sub->add_option("--notation", c.notation, "parenthesis or plus-minus [env UNC_NOTATION]");
    sub->add_option("--digits", c.digits, "significant digits of the uncertainty [env UNC_DIGITS]");
    sub->add_option("--format", c.format, "text, csv or json")->capture_default_str();
  };

  Common eval_common;
  EvalRequest eval_req;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression with first-order propagation");
  eval->add_option("expression", eval_req.expression, "e.g. \"x/y\"")->required();
  eval->add_option("vars", eval_req.vars, "name=measurement, e.g. x=5.00(1)");
  add_common(eval, eval_common);

  Common table_common;
  TableRequest table_req;
  auto* table = app.add_subcommand("table", "Attach uncertainties to CSV columns and derive new ones");
  table->add_option("input", table_req.input, "CSV file, or - for stdin")->capture_default_str();
  table->add_option("--error,-e", table_req.errors,
                    "column=spec with spec abs:A | rel:F | N% | col:NAME | expr:EXPR");
  table->add_option("--error-all", table_req.error_all, "spec for every numeric column");
  table->add_option("--derive,-d", table_req.derive, "name=expression, evaluated per row");
  table->add_option("--summarize,-s", table_req.summarize,
                    "mean(col), median(col), sum(col), prod(col), min(col), max(col)");
  add_common(table, table_common);

  Common mc_common;
  McRequest mc_req;
  auto* mc = app.add_subcommand("mc", "Compare first-order propagation with Monte Carlo");
  mc->add_option("expression", mc_req.expression)->required();
  mc->add_option("vars", mc_req.vars, "name=measurement");
  mc->add_option("--samples,-n", mc_req.samples)->capture_default_str();
  mc->add_option("--seed", mc_req.seed)->capture_default_str();
  mc->add_option("--quantiles", mc_req.quantiles)->delimiter(',')->capture_default_str();
  add_common(mc, mc_common);

  PlotRequest plot_req;
  auto* plot = app.add_subcommand("plot", "Scatter plot with error bars as SVG");
  plot->add_option("input", plot_req.input, "CSV file, or - for stdin")->capture_default_str();
  plot->add_option("--x", plot_req.x)->required();
  plot->add_option("--y", plot_req.y)->required();
  plot->add_option("--group", plot_req.group);
  plot->add_option("--output,-o", plot_req.output, "SVG path, or - for stdout")->required();
  plot->add_option("--error,-e", plot_req.errors, "column=spec");
  plot->add_option("--error-all", plot_req.error_all, "spec for every numeric column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUser;
  }

  const auto config = [&](const Common& c) { return resolve_config(c.notation, c.digits, c.format, env); };
  if (eval->parsed()) {
    CliConfig cfg;
    if (int rc = guarded(err, [&] { cfg = config(eval_common); return kExitOk; })) return rc;
    return cmd_eval(eval_req, cfg, out, err);
  }
  if (table->parsed()) {
    CliConfig cfg;
    if (int rc = guarded(err, [&] { cfg = config(table_common); return kExitOk; })) return rc;
    return cmd_table(table_req, cfg, in, out, err);
  }
  if (mc->parsed()) {
    CliConfig cfg;
    if (int rc = guarded(err, [&] { cfg = config(mc_common); return kExitOk; })) return rc;
    return cmd_mc(mc_req, cfg, out, err);
  }
  return cmd_plot(plot_req, in, out, err);
}

}  // namespace unc::cli
