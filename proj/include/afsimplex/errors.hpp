#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace afs {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidProblem : public Error {
 public:
  using Error::Error;
};

class UnsupportedFreeVariable : public Error {
 public:
  explicit UnsupportedFreeVariable(const std::string& var)
      : Error("free variable '" + var + "' is not supported"), variable(var) {}
  std::string variable;
};

class EmptyProblem : public Error {
 public:
  EmptyProblem() : Error("problem has no constraints") {}
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by a zero-classified value") {}
};

class ZeroPivot : public Error {
 public:
  ZeroPivot(std::size_t row, std::size_t col)
      : Error("pivot entry (" + std::to_string(row) + ", " + std::to_string(col) +
              ") is zero"),
        row(row),
        col(col) {}
  std::size_t row;
  std::size_t col;
};

// Raised when the leaving-row search finds nothing although the entering
// column was selected by the pricing step. Indicates a broken invariant.
class NoEligibleRow : public Error {
 public:
  explicit NoEligibleRow(std::size_t col)
      : Error("no eligible leaving row for column " + std::to_string(col)), col(col) {}
  std::size_t col;
};

class NotPrimalFeasible : public Error {
 public:
  NotPrimalFeasible() : Error("dictionary is not primal feasible") {}
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace afs
