#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unc {

// Base of every error the library raises for bad caller input. The CLI maps
// these to exit code 2; anything else escaping is an internal failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NegativeError : public Error {
 public:
  using Error::Error;
};

// A NaN or infinite uncertainty attached to a finite value.
class InvalidError : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfBounds : public Error {
 public:
  using Error::Error;
};

class UnknownFunction : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotPositiveSemidefinite : public Error {
 public:
  using Error::Error;
};

class TooShort : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class ZeroWeightSum : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(std::string name)
      : Error("unbound variable: " + name), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class NonFiniteSamples : public Error {
 public:
  NonFiniteSamples(std::size_t non_finite, std::size_t total)
      : Error("non-finite model output in " + std::to_string(non_finite) + " of " +
              std::to_string(total) + " samples (limit 1%)"),
        non_finite_(non_finite),
        total_(total) {}
  std::size_t non_finite() const noexcept { return non_finite_; }
  std::size_t total() const noexcept { return total_; }

 private:
  std::size_t non_finite_;
  std::size_t total_;
};

// Failure positioned inside a source string (value notation or expression).
class PositionedError : public Error {
 public:
  PositionedError(const std::string& what, std::size_t position, std::string reason)
      : Error(what + " at offset " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(std::move(reason)) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

class ParseError : public PositionedError {
 public:
  ParseError(std::size_t position, std::string reason)
      : PositionedError("parse error", position, std::move(reason)) {}
};

class LexError : public PositionedError {
 public:
  LexError(std::size_t offset, char offending)
      : PositionedError("lex error", offset,
                        std::string("unexpected character '") + offending + "'"),
        offending_(offending) {}
  char offending() const noexcept { return offending_; }

 private:
  char offending_;
};

}  // namespace unc
