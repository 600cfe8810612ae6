#pragma once

#include <stdexcept>
#include <string>

namespace magbound {

// Invalid input: a parameter is out of its documented range.  `field()` names
// the offending parameter so front ends can report it.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Argument outside the mathematical domain of a kernel (e.g. digamma at x <= 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A solver could not produce a result for otherwise valid input.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_positive(double value, const char* field) {
  if (!(value > 0.0)) {
    throw ValidationError(field, "must be positive, got " + std::to_string(value));
  }
}

}  // namespace detail

}  // namespace magbound
