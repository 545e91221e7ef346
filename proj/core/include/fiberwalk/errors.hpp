#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fiberwalk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad cap, n < 2, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A configured work or memory budget would be exceeded.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, double completed_fraction)
      : Error(what), completed_fraction_(completed_fraction) {}
  /// Fraction of the requested work that fits within the budget, in [0, 1).
  double completed_fraction() const noexcept { return completed_fraction_; }

 private:
  double completed_fraction_;
};

/// No strictly positive row-space functional is known, so the fiber may be infinite.
class FinitenessUncertified : public Error {
 public:
  using Error::Error;
};

/// Move vectors expected to be linearly independent are not.
class DependentBasis : public Error {
 public:
  DependentBasis(const std::string& what, std::vector<mpz_class> witness)
      : Error(what), witness_(std::move(witness)) {}
  /// Nonzero coefficients a with sum a_i b_i = 0.
  const std::vector<mpz_class>& witness() const noexcept { return witness_; }

 private:
  std::vector<mpz_class> witness_;
};

/// An exact value does not fit the machine-width representation it was narrowed to.
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace fiberwalk
