#pragma once

#include <stdexcept>
#include <string>

namespace disclab {

/// A constructor or product would exceed the configured maximum degree.
class DegreeOverflow : public std::runtime_error {
 public:
  DegreeOverflow(std::size_t requested, std::size_t limit)
      : std::runtime_error("degree " + std::to_string(requested) +
                           " exceeds configured max degree " +
                           std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}
  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

/// The angular sample count cannot resolve the polynomial degree.
class AliasingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on a named input failed.
class ParameterError : public std::invalid_argument {
 public:
  ParameterError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A computed sequence violated a property it must satisfy (e.g. monotone
/// integral means), which signals an under-resolved computation.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace disclab
