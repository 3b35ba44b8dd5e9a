#pragma once

#include <stdexcept>
#include <string>

namespace phavail {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonSquare : public Error {
 public:
  NonSquare(long rows, long cols)
      : Error("matrix is not square: " + std::to_string(rows) + "x" +
              std::to_string(cols)) {}
};

class NegativeOffDiagonal : public Error {
 public:
  NegativeOffDiagonal(int i, int j, double value)
      : Error("negative off-diagonal rate at (" + std::to_string(i) + "," +
              std::to_string(j) + "): " + std::to_string(value)),
        row(i), col(j) {}
  int row, col;
};

class RowSumNonzero : public Error {
 public:
  RowSumNonzero(int i, double r)
      : Error("generator row " + std::to_string(i) +
              " does not sum to zero, residual " + std::to_string(r)),
        row(i), residual(r) {}
  int row;
  double residual;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(long expected, long got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)) {}
};

class NegativeTime : public Error {
 public:
  explicit NegativeTime(double t)
      : Error("time must be >= 0, got " + std::to_string(t)) {}
};

class NonPositiveRate : public Error {
 public:
  NonPositiveRate(const std::string& name, double value)
      : Error("rate '" + name + "' out of range: " + std::to_string(value)) {}
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class EmptySystem : public Error {
 public:
  EmptySystem() : Error("system has no components") {}
};

class TooManyComponents : public Error {
 public:
  explicit TooManyComponents(std::size_t n)
      : Error("product-space chain supports at most 4 components, got " +
              std::to_string(n)) {}
};

class InvalidPlan : public Error {
 public:
  using Error::Error;
};

/// Configuration-file diagnostics. Each carries enough context to name the
/// offending field or location.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public ConfigError {
 public:
  SyntaxError(int line, const std::string& what)
      : ConfigError("syntax error near line " + std::to_string(line) + ": " +
                    what),
        line(line) {}
  int line;
};

class UnknownField : public ConfigError {
 public:
  explicit UnknownField(const std::string& name)
      : ConfigError("unknown field '" + name + "'"), field(name) {}
  std::string field;
};

class InvalidRate : public ConfigError {
 public:
  InvalidRate(const std::string& field, const std::string& value)
      : ConfigError("invalid value for '" + field + "': " + value),
        field(field), value(value) {}
  std::string field;
  std::string value;
};

class UnknownLaw : public ConfigError {
 public:
  explicit UnknownLaw(const std::string& value)
      : ConfigError("unknown law '" + value + "' (expected \"lindley\" or \"exponential\")"),
        value(value) {}
  std::string value;
};

}  // namespace phavail
