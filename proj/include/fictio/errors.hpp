#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fictio {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Arithmetic attempted between exact and float values. Mixing the two
/// coefficient kinds is always an error, never a silent promotion.
class ModeMismatch : public Error {
 public:
  ModeMismatch() : Error("mode mismatch: exact and float values cannot mix") {}
  explicit ModeMismatch(const std::string& what) : Error(what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

class TranscendentalInExactMode : public Error {
 public:
  explicit TranscendentalInExactMode(const std::string& fn)
      : Error("builtin '" + fn + "' is not evaluable in exact mode") {}
};

/// Float-mode comparison whose leading coefficients are too close to call.
class IndeterminateComparison : public Error {
 public:
  explicit IndeterminateComparison(const std::string& what) : Error(what) {}
};

class PrecisionWindowExceeded : public Error {
 public:
  explicit PrecisionWindowExceeded(const std::string& what) : Error(what) {}
};

/// Lexer/parser failure. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found)
      : Error("parse error at offset " + std::to_string(position) + ": expected " + expected +
              ", found " + (found.empty() ? std::string("end of input") : "'" + found + "'")),
        position_(position),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

}  // namespace fictio
