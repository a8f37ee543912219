#include "unc/functions.hpp"

#include <string>

#include "unc/error.hpp"

namespace unc {

std::string_view name(UnaryFn f) {
  switch (f) {
    case UnaryFn::neg: return "neg";
    case UnaryFn::abs: return "abs";
    case UnaryFn::sqrt: return "sqrt";
    case UnaryFn::exp: return "exp";
    case UnaryFn::ln: return "ln";
    case UnaryFn::log2: return "log2";
    case UnaryFn::log10: return "log10";
    case UnaryFn::sin: return "sin";
    case UnaryFn::cos: return "cos";
    case UnaryFn::tan: return "tan";
    case UnaryFn::asin: return "asin";
    case UnaryFn::acos: return "acos";
    case UnaryFn::atan: return "atan";
    case UnaryFn::sinh: return "sinh";
    case UnaryFn::cosh: return "cosh";
    case UnaryFn::tanh: return "tanh";
  }
  throw_unknown(f);
}

std::string_view name(BinaryFn f) {
  switch (f) {
    case BinaryFn::add: return "add";
    case BinaryFn::sub: return "sub";
    case BinaryFn::mul: return "mul";
    case BinaryFn::div: return "div";
    case BinaryFn::pow: return "pow";
    case BinaryFn::atan2: return "atan2";
  }
  throw_unknown(f);
}

std::optional<UnaryFn> unary_from_name(std::string_view id) {
  if (id == "log") return UnaryFn::ln;
  for (UnaryFn f : kUnaryFns) {
    if (name(f) == id) return f;
  }
  return std::nullopt;
}

std::optional<BinaryFn> binary_from_name(std::string_view id) {
  for (BinaryFn f : kBinaryFns) {
    if (name(f) == id) return f;
  }
  return std::nullopt;
}

UnaryFn require_unary(std::string_view id) {
  if (auto f = unary_from_name(id)) return *f;
  throw UnknownFunction("unknown function: " + std::string(id));
}

BinaryFn require_binary(std::string_view id) {
  if (auto f = binary_from_name(id)) return *f;
  throw UnknownFunction("unknown function: " + std::string(id));
}

void throw_unknown(UnaryFn f) {
  throw UnknownFunction("unknown unary function id " + std::to_string(static_cast<int>(f)));
}

void throw_unknown(BinaryFn f) {
  throw UnknownFunction("unknown binary function id " + std::to_string(static_cast<int>(f)));
}

}  // namespace unc
