#pragma once

// Exact decimal digits of a double, and rounding at a decimal place.
//
// Rounding works on the exact expansion of the binary value, so a tie is a
// true tie (0.25 → 0.3) and never an artifact of an intermediate printf.

#include <string>

namespace unc::detail {

enum class RoundingMode { half_away_from_zero, half_even };

/// The single switch for display rounding.
inline constexpr RoundingMode kDisplayRounding = RoundingMode::half_away_from_zero;

/// |x| == digits × 10^last_place, with no leading or trailing zeros in
/// `digits`. Zero has empty `digits`.
struct ExactDecimal {
  std::string digits;
  int last_place = 0;

  bool is_zero() const { return digits.empty(); }
  /// Decimal exponent of the leading digit. Undefined for zero.
  int leading_exponent() const { return last_place + static_cast<int>(digits.size()) - 1; }
};

/// Requires finite x; the sign is dropped.
ExactDecimal exact_decimal(double x);

/// Digits of round(|x| / 10^place) with no leading zeros ("0" for zero).
std::string round_at(const ExactDecimal& x, int place,
                     RoundingMode mode = kDisplayRounding);

/// Places a decimal point so that the integer `digits` reads as
/// digits × 10^place: ("5", -2) → "0.05", ("16", 0) → "16", ("6", 1) → "60".
std::string place_point(const std::string& digits, int place);

}  // namespace unc::detail
