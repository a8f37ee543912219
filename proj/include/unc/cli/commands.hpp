#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "unc/format.hpp"

namespace unc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUser = 2;

enum class OutputFormat { text, csv, json };

struct CliConfig {
  Notation notation;
  OutputFormat format = OutputFormat::text;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads UNC_NOTATION and UNC_DIGITS from the process environment.
std::optional<std::string> process_env(const std::string& name);

/// Flags win; unset flags fall back to UNC_NOTATION / UNC_DIGITS, then to
/// parenthesis notation with one digit. Throws InvalidArgument.
CliConfig resolve_config(const std::optional<std::string>& notation,
                         const std::optional<int>& digits, const std::string& format,
                         const EnvLookup& env);

struct EvalRequest {
  std::string expression;
  std::vector<std::string> vars;  // "name=<measurement>"
};

struct TableRequest {
  std::string input = "-";                 // path, or "-" for stdin
  std::vector<std::string> errors;         // "column=<error spec>"
  std::optional<std::string> error_all;    // spec applied to every numeric column
  std::vector<std::string> derive;         // "name=<expression>"
  std::vector<std::string> summarize;      // "mean(col)", "median(col)", ...
};

struct McRequest {
  std::string expression;
  std::vector<std::string> vars;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  std::vector<double> quantiles{0.025, 0.975};
};

struct PlotRequest {
  std::string input = "-";
  std::string x;
  std::string y;
  std::optional<std::string> group;
  std::string output;
  std::vector<std::string> errors;
  std::optional<std::string> error_all;
};

// Each command writes its result to `out`, diagnostics to `err`, and
// returns the process exit code.
int cmd_eval(const EvalRequest& req, const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_table(const TableRequest& req, const CliConfig& cfg, std::istream& in, std::ostream& out,
              std::ostream& err);
int cmd_mc(const McRequest& req, const CliConfig& cfg, std::ostream& out, std::ostream& err);
/// Writes the SVG to req.output, or to `out` when req.output is "-".
int cmd_plot(const PlotRequest& req, std::istream& in, std::ostream& out, std::ostream& err);

/// Full command line: `unc eval|table|mc|plot ...`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err, const EnvLookup& env = process_env);

}  // namespace unc::cli
