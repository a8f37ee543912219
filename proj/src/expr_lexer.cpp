#include <charconv>
#include <limits>

#include "unc/error.hpp"
#include "unc/expr.hpp"

namespace unc {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c) || c == '.'; }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto at = [&](std::size_t k) { return k < src.size() ? src[k] : '\0'; };

  while (i < src.size()) {
    const char c = src[i];
    const std::size_t start = i;

    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (is_digit(c) || (c == '.' && is_digit(at(i + 1)))) {
      while (is_digit(at(i))) ++i;
      if (at(i) == '.') {
        ++i;
        while (is_digit(at(i))) ++i;
      }
      if (at(i) == 'e' || at(i) == 'E') {
        std::size_t j = i + 1;
        if (at(j) == '+' || at(j) == '-') ++j;
        if (is_digit(at(j))) {
          i = j;
          while (is_digit(at(i))) ++i;
        }
      }
      Token t{TokenKind::number, std::string(src.substr(start, i - start)), 0.0, start};
      const auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
      if (res.ec == std::errc::result_out_of_range) {
        t.number = t.text.find_first_of("123456789") == std::string::npos
                       ? 0.0
                       : std::numeric_limits<double>::infinity();
      }
      out.push_back(std::move(t));
    } else if (is_ident_start(c)) {
      while (is_ident_char(at(i))) ++i;
      out.push_back({TokenKind::identifier, std::string(src.substr(start, i - start)), 0.0, start});
    } else if (c == '`') {
      const auto close = src.find('`', i + 1);
      if (close == std::string_view::npos || close == i + 1) throw LexError(start, c);
      out.push_back({TokenKind::identifier, std::string(src.substr(i + 1, close - i - 1)), 0.0,
                     start});
      i = close + 1;
    } else if (c == '*' && at(i + 1) == '*') {
      out.push_back({TokenKind::op, "^", 0.0, start});
      i += 2;
    } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      out.push_back({TokenKind::op, std::string(1, c), 0.0, start});
      ++i;
    } else if (c == '(') {
      out.push_back({TokenKind::lparen, "(", 0.0, start});
      ++i;
    } else if (c == ')') {
      out.push_back({TokenKind::rparen, ")", 0.0, start});
      ++i;
    } else if (c == ',') {
      out.push_back({TokenKind::comma, ",", 0.0, start});
      ++i;
    } else {
      throw LexError(start, c);
    }
  }
  return out;
}

}  // namespace unc
