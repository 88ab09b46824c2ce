#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace reglang {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed regular expression text. `position()` is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A symbol outside the declared alphabet, or mismatched alphabets.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// A resource cap was hit (automaton state limit, enumeration budget).
class LimitError : public Error {
 public:
  using Error::Error;
};

/// A component without cycles has no period.
class UndefinedPeriodError : public Error {
 public:
  using Error::Error;
};

/// An iterative computation did not settle within its iteration cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double residual,
                   std::optional<double> partial_value = std::nullopt)
      : Error(message), residual_(residual), partial_value_(partial_value) {}

  double residual() const noexcept { return residual_; }
  std::optional<double> partial_value() const noexcept { return partial_value_; }

 private:
  double residual_;
  std::optional<double> partial_value_;
};

}  // namespace reglang
