#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fanolab {

enum class ErrorKind {
  EmptyInput,
  NotFullDimensional,
  NotFano,
  NotReflexive,
  NotUnimodular,
  DegenerateEdge,
  BadIndex,
  TooLarge,
  VariableMismatch,
  DimensionMismatch,
  ZeroPolynomial,
  NotSupported,
  InconsistentEdge,
  MissingDecomposition,
  InvalidDecomposition,
  SyntaxError,
  UnknownVariable,
  InsufficientCoefficients,
  NotDeformed,
  DegenerateSample,
  PointNotOnVariety,
  ParseError,
  DimensionError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (and the CLI) can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the expression parser; position is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, std::size_t position, const std::string& message)
      : Error(kind, message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Raised by document decoders; line and column are 1-based.
class DocumentError : public Error {
 public:
  DocumentError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
      : Error(kind, message + " (line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fanolab
