#pragma once

#include <stdexcept>
#include <string>

namespace lptrans {

/// Family or measure parameters outside their admissible range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation point outside the region where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A gamma-ratio quantity that does not fit in a double. The logarithm is
/// always finite and carried along.
class OverflowError : public std::overflow_error {
 public:
  OverflowError(const std::string& what, double log_value)
      : std::overflow_error(what), log_value_(log_value) {}
  double log_value() const noexcept { return log_value_; }

 private:
  double log_value_;
};

/// Iteration did not converge, a truncation budget was not met, or a
/// result violated a structural sign constraint.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lptrans
