#include "decimal.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace unc::detail {

ExactDecimal exact_decimal(double x) {
  x = std::fabs(x);
  if (x == 0.0) return {};
  if (!std::isfinite(x)) throw std::domain_error("exact_decimal of non-finite value");

  int binary_exponent = 0;
  std::frexp(x, &binary_exponent);
  // The ulp is 2^(binary_exponent - 53), which needs that many decimals, and
  // no double goes below 2^-1074.
  const int precision = std::clamp(53 - binary_exponent, 0, 1074);

  std::vector<char> buf(static_cast<std::size_t>(precision) + 400);
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::fixed, precision);
  if (res.ec != std::errc{}) throw std::runtime_error("exact_decimal: buffer too small");

  ExactDecimal out;
  out.digits.reserve(static_cast<std::size_t>(res.ptr - buf.data()));
  for (const char* p = buf.data(); p != res.ptr; ++p) {
    if (*p != '.') out.digits.push_back(*p);
  }
  out.last_place = -precision;

  const auto first = out.digits.find_first_not_of('0');
  out.digits.erase(0, first);
  const auto last = out.digits.find_last_not_of('0');
  const auto trailing = out.digits.size() - 1 - last;
  out.digits.erase(last + 1);
  out.last_place += static_cast<int>(trailing);
  return out;
}

namespace {

// Adds one to a string of decimal digits.
void increment(std::string& digits) {
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it != '9') {
      ++*it;
      return;
    }
    *it = '0';
  }
  digits.insert(digits.begin(), '1');
}

}  // namespace

std::string round_at(const ExactDecimal& x, int place, RoundingMode mode) {
  if (x.is_zero()) return "0";
  const int len = static_cast<int>(x.digits.size());
  if (place <= x.last_place) return x.digits + std::string(x.last_place - place, '0');

  const int drop = place - x.last_place;  // digits removed from the right
  const int keep = len - drop;
  std::string kept = keep > 0 ? x.digits.substr(0, static_cast<std::size_t>(keep)) : "";

  bool up = false;
  if (keep >= 0) {
    const char first_dropped = x.digits[static_cast<std::size_t>(keep)];
    if (first_dropped > '5') {
      up = true;
    } else if (first_dropped == '5') {
      // digits carry no trailing zeros, so anything after the 5 is nonzero
      const bool exact_half = keep + 1 == len;
      if (!exact_half || mode == RoundingMode::half_away_from_zero) {
        up = true;
      } else {
        const int last_kept = kept.empty() ? 0 : kept.back() - '0';
        up = last_kept % 2 == 1;
      }
    }
  }
  if (kept.empty()) kept = "0";
  if (up) increment(kept);
  const auto nz = kept.find_first_not_of('0');
  return nz == std::string::npos ? "0" : kept.substr(nz);
}

std::string place_point(const std::string& digits, int place) {
  if (place >= 0) {
    if (digits == "0") return digits;
    return digits + std::string(static_cast<std::size_t>(place), '0');
  }
  const auto decimals = static_cast<std::size_t>(-place);
  std::string padded = digits;
  if (padded.size() <= decimals) padded.insert(0, decimals + 1 - padded.size(), '0');
  padded.insert(padded.size() - decimals, 1, '.');
  return padded;
}

}  // namespace unc::detail
