#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ccp {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition (length mismatch, bad K, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Syntactically well-formed input whose values violate a domain invariant
// (negative sum, per-row capacity overflow, duplicate edge, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of its budget before reaching a verdict.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what, std::uint64_t partial_count = 0)
      : Error(what), partial_count_(partial_count) {}

  // How many results had been produced before the budget ran out.
  // The partial list is not a complete answer and must not be used as one.
  std::uint64_t partial_count() const { return partial_count_; }

 private:
  std::uint64_t partial_count_;
};

// Reconstruction was asked for an instance that has no realization.
// Carries the first violated structure-function cell (k,l), in the sorted
// order used by the consistency test, when one exists; a plain total-sum
// mismatch has no such cell.
class InconsistentError : public Error {
 public:
  InconsistentError(const std::string& what,
                    std::optional<std::pair<int, int>> witness)
      : Error(what), witness_(witness) {}

  std::optional<std::pair<int, int>> witness() const { return witness_; }

 private:
  std::optional<std::pair<int, int>> witness_;
};

// "Cannot happen" state reached; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccp
