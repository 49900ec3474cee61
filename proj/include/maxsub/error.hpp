#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace maxsub {

enum class ErrorCode {
  DivisionByZero,
  SpecMismatch,
  ShapeMismatch,
  Singular,
  NotInvertible,
  InvalidField,
  ParseError,
  SyntaxError,
  MissingVariable,
  BadParams,
  FieldTooSmall,
  CharTooSmall,
  ZeroDivisorDetected,
  NotAutomorphism,
  BadOrder,
  DegreeBoundViolated,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MissingVariable: return "MissingVariable";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::CharTooSmall: return "CharTooSmall";
    case ErrorCode::ZeroDivisorDetected: return "ZeroDivisorDetected";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::DegreeBoundViolated: return "DegreeBoundViolated";
  }
  return "Unknown";
}

/// Every failure raised by the library. The code identifies the contract
/// that was violated; the message carries the details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by Gaussian elimination when no pivot exists in `column`; the
/// column index certifies the rank deficiency.
class SingularError : public Error {
 public:
  SingularError(std::size_t column, const std::string& message)
      : Error(ErrorCode::Singular, message), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Syntax error in a generalized rational expression, with 1-based position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace maxsub
