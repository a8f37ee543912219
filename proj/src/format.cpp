#include "unc/format.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <optional>

#include "decimal.hpp"

namespace unc {
namespace {

using detail::exact_decimal;
using detail::place_point;
using detail::round_at;

constexpr int kMinFixedExponent = -4;
constexpr int kMaxFixedExponent = 15;
constexpr std::string_view kPlusMinus = " ± ";

std::string special_repr(double x) {
  if (std::isnan(x)) return "NaN";
  return x < 0 ? "-Inf" : "Inf";
}

// Shortest numeral that reads back as the same double.
std::string shortest_repr(double x) {
  if (!std::isfinite(x)) return special_repr(x);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string exponent_suffix(int e) {
  std::string digits = std::to_string(e < 0 ? -e : e);
  if (digits.size() < 2) digits.insert(0, "0");
  return std::string("e") + (e < 0 ? '-' : '+') + digits;
}

std::string format_nonfinite(double v, double e, NotationStyle style) {
  const std::string vs = shortest_repr(v);
  const std::string es = shortest_repr(e);
  return style == NotationStyle::parenthesis ? vs + "(" + es + ")"
                                             : vs + std::string(kPlusMinus) + es;
}

}  // namespace

std::string_view name(NotationStyle style) {
  return style == NotationStyle::parenthesis ? "parenthesis" : "plus-minus";
}

NotationStyle notation_from_name(std::string_view id) {
  if (id == "parenthesis") return NotationStyle::parenthesis;
  if (id == "plus-minus") return NotationStyle::plus_minus;
  throw InvalidArgument("unknown notation '" + std::string(id) +
                        "' (expected parenthesis or plus-minus)");
}

std::string format_value(double v, double e, const Notation& n) {
  if (n.digits < 1) throw InvalidArgument("digits must be at least 1");
  if (!std::isfinite(v) || !std::isfinite(e)) {
    if (e == 0.0) return shortest_repr(v);
    return format_nonfinite(v, e, n.style);
  }
  if (e == 0.0) return shortest_repr(v);

  // Uncertainty to n.digits significant digits; a decade carry moves the place.
  const auto err = exact_decimal(e);
  int place = err.leading_exponent() - n.digits + 1;
  std::string unc_digits = round_at(err, place);
  if (static_cast<int>(unc_digits.size()) > n.digits) {
    ++place;
    unc_digits = round_at(err, place);
  }

  const std::string val_digits = round_at(exact_decimal(v), place);
  const std::string sign = (v < 0 && val_digits != "0") ? "-" : "";
  const int exponent = val_digits == "0"
                           ? place + static_cast<int>(unc_digits.size()) - 1
                           : place + static_cast<int>(val_digits.size()) - 1;

  if (exponent < kMinFixedExponent || exponent > kMaxFixedExponent) {
    const int mantissa_place = place - exponent;
    const std::string mantissa = place_point(val_digits, mantissa_place);
    if (n.style == NotationStyle::parenthesis) {
      return sign + mantissa + "(" + unc_digits + ")" + exponent_suffix(exponent);
    }
    return "(" + sign + mantissa + std::string(kPlusMinus) +
           place_point(unc_digits, mantissa_place) + ")" + exponent_suffix(exponent);
  }

  const std::string value = sign + place_point(val_digits, place);
  if (n.style == NotationStyle::parenthesis) {
    // With no decimals shown the last digit is the units digit.
    const std::string referred = place < 0 ? unc_digits : place_point(unc_digits, place);
    return value + "(" + referred + ")";
  }
  return value + std::string(kPlusMinus) + place_point(unc_digits, place);
}

std::vector<std::string> format_column(const UncertainVector& x, const Notation& n) {
  std::vector<std::string> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(format_value(x[i], n));
  return out;
}

namespace {

struct Numeral {
  std::string text;  // sign, digits and point as written, or NaN/Inf
  int decimals = 0;
  bool special = false;
};

class ValueScanner {
 public:
  explicit ValueScanner(std::string_view s) : s_(s) {}

  UncertainScalar run() {
    skip_ws();
    UncertainScalar out = peek() == '(' ? plus_minus_grouped() : ungrouped();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  UncertainScalar plus_minus_grouped() {
    ++pos_;
    skip_ws();
    const Numeral v = numeral(true);
    skip_ws();
    if (!plus_minus_symbol()) fail("expected '±' inside parentheses");
    skip_ws();
    const Numeral u = numeral(false);
    skip_ws();
    expect(')');
    const int exp = exponent().value_or(0);
    return {to_double(v, exp), to_double(u, exp)};
  }

  UncertainScalar ungrouped() {
    const Numeral v = numeral(true);
    const auto own_exp = exponent();

    if (peek() == '(') {
      if (own_exp) fail("exponent must follow the parenthesized uncertainty");
      ++pos_;
      skip_ws();
      const std::size_t unc_start = pos_;
      const Numeral u = numeral(false);
      if (u.special) fail("uncertainty must be numeric");
      skip_ws();
      expect(')');
      const int exp = exponent().value_or(0);
      if (v.special) return {to_double(v, 0), std::numeric_limits<double>::quiet_NaN()};
      if (u.text.find('.') != std::string::npos) return {to_double(v, exp), to_double(u, exp)};
      // Digits refer to the last digits of the value.
      if (u.text.empty()) fail_at(unc_start, "empty uncertainty");
      return {to_double(v, exp), to_double(u, exp - v.decimals)};
    }

    const std::size_t before_ws = pos_;
    skip_ws();
    if (plus_minus_symbol()) {
      skip_ws();
      const Numeral u = numeral(false);
      const int u_exp = exponent().value_or(0);
      return {to_double(v, own_exp.value_or(0)), to_double(u, u_exp)};
    }
    pos_ = before_ws;
    return {to_double(v, own_exp.value_or(0)), 0.0};
  }

  Numeral numeral(bool allow_sign) {
    Numeral out;
    const std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') {
      if (!allow_sign) fail("uncertainty cannot be signed");
      out.text.push_back(s_[pos_++]);
    }
    for (std::string_view word : {"NaN", "Inf"}) {
      if (s_.substr(pos_, word.size()) == word) {
        pos_ += word.size();
        out.text += word;
        out.special = true;
        return out;
      }
    }
    std::size_t int_digits = 0;
    while (is_digit(peek())) {
      out.text.push_back(s_[pos_++]);
      ++int_digits;
    }
    if (peek() == '.') {
      out.text.push_back(s_[pos_++]);
      while (is_digit(peek())) {
        out.text.push_back(s_[pos_++]);
        ++out.decimals;
      }
    }
    if (int_digits == 0 && out.decimals == 0) fail_at(start, "expected a number");
    return out;
  }

  std::optional<int> exponent() {
    if (peek() != 'e' && peek() != 'E') return std::nullopt;
    const std::size_t start = pos_++;
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = s_[pos_++] == '-';
    int value = 0;
    std::size_t digits = 0;
    while (is_digit(peek())) {
      if (value < 100000) value = value * 10 + (s_[pos_] - '0');
      ++pos_;
      ++digits;
    }
    if (digits == 0) fail_at(start, "malformed exponent");
    return negative ? -value : value;
  }

  bool plus_minus_symbol() {
    for (std::string_view sym : {"±", "+/-", "+-"}) {
      if (s_.substr(pos_, sym.size()) == sym) {
        pos_ += sym.size();
        return true;
      }
    }
    return false;
  }

  double to_double(const Numeral& n, int exp) const {
    if (n.special) {
      const bool negative = n.text.front() == '-';
      if (n.text.find("NaN") != std::string::npos) return std::numeric_limits<double>::quiet_NaN();
      return negative ? -std::numeric_limits<double>::infinity()
                      : std::numeric_limits<double>::infinity();
    }
    std::string text = n.text.front() == '+' ? n.text.substr(1) : n.text;
    text += "e" + std::to_string(exp);
    double out = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    if (res.ec == std::errc::result_out_of_range) {
      // from_chars leaves `out` untouched on overflow/underflow
      const bool negative = text.front() == '-';
      const bool huge = exp > 0;
      out = huge ? std::numeric_limits<double>::infinity() : 0.0;
      if (negative) out = -out;
    } else if (res.ec != std::errc{}) {
      fail("unreadable number");
    }
    return out;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (peek() == ' ' || peek() == '\t') ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  [[noreturn]] void fail(const std::string& reason) const { fail_at(pos_, reason); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& reason) const {
    throw ParseError(at, reason);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

UncertainScalar parse_value(std::string_view s) { return ValueScanner(s).run(); }

}  // namespace unc
