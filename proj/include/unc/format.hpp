#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unc/core.hpp"

namespace unc {

enum class NotationStyle { parenthesis, plus_minus };

/// How a measurement is rendered: notation and significant digits of the
/// uncertainty. The value is always rounded to the uncertainty's last digit.
struct Notation {
  NotationStyle style = NotationStyle::parenthesis;
  int digits = 1;
};

std::string_view name(NotationStyle style);
/// "parenthesis" or "plus-minus"; throws InvalidArgument otherwise.
NotationStyle notation_from_name(std::string_view id);

/// Renders v with uncertainty e.
///
///   format_value(5, 0.0509902)                         → "5.00(5)"
///   format_value(5, 0.0509902, {plus_minus, 1})        → "5.00 ± 0.05"
///   format_value(1.6021766208e-19, 9.8e-28, {paren, 2}) → "1.6021766208(98)e-19"
///
/// The uncertainty is rounded half away from zero to `digits` significant
/// digits; when that carries into a new decade (0.096 → 0.1) the displayed
/// place follows the carried value. In parenthesis style the digits in
/// brackets count units of the value's last displayed digit. Scientific
/// notation is used when the rounded value's decimal exponent falls outside
/// [-4, 15]. Exact values (e == 0) print as the bare shortest round-trip
/// numeral. Output is locale independent.
///
/// Throws InvalidArgument when n.digits < 1.
std::string format_value(double v, double e, const Notation& n = {});

inline std::string format_value(UncertainScalar x, const Notation& n = {}) {
  return format_value(x.value, x.error, n);
}

/// Each element formatted independently.
std::vector<std::string> format_column(const UncertainVector& x, const Notation& n = {});

/// Reads any of
///   "100.02147(35)"        uncertainty in units of the last digit
///   "100.02147(0.00035)"   uncertainty in the value's unit
///   "100.02147 ± 0.00035"  plus-minus ("+/-" and "+-" also accepted)
///   "1.6021766208(98)e-19" exponent shared by value and uncertainty
///   "(1.60 ± 0.02)e-19"    shared exponent in plus-minus form
///   "42", "-3.5e2"         bare numerals, exact
/// Returned doubles are the nearest doubles to the decimal quantities
/// written; no rounding beyond that. Throws ParseError.
UncertainScalar parse_value(std::string_view s);

}  // namespace unc
