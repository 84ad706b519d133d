#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace puiseux {

enum class ErrorCode {
  ZeroDenominator,
  NegativeValue,
  NotPrime,
  Syntax,
  Validation,
  NegativeGenerator,
  MixedSignsGeneratesGroup,
  TrivialMonoid,
  NotAMember,
  NonSquarefreeDenominator,
  Unsupported,
  Overflow,
  Contradiction,
};

/// Stable identifier printed by the CLI, e.g. "E_NOT_A_MEMBER".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Any failure while reading the monoid description language or a rational
/// literal. Carries the byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& message)
      : Error(code, message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SyntaxError : public ParseError {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : ParseError(ErrorCode::Syntax, position,
                   "syntax error at " + std::to_string(position) +
                       ": expected " + expected),
        expected_(std::move(expected)) {}

  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string expected_;
};

/// Raised by the rule engine when two rules disagree. Always a bug.
class ContradictionError : public Error {
 public:
  explicit ContradictionError(const std::string& message)
      : Error(ErrorCode::Contradiction, message) {}
};

}  // namespace puiseux
