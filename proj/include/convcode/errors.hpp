#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace convcode {

/// Caller passed arguments that violate an operation's preconditions
/// (shape mismatch, mixed fields, out-of-range index, malformed document).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined request: inverse of zero, singular matrix.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters are consistent but no construction exists for them, most
/// commonly a field that is too small for the requested code lengths.
class ParameterError : public std::runtime_error {
 public:
  explicit ParameterError(const std::string& what,
                          std::optional<std::uint64_t> required_order = {})
      : std::runtime_error(what), required_order_(required_order) {}

  /// Minimum field order needed, when the failure is a field-size one.
  std::optional<std::uint64_t> required_order() const { return required_order_; }

 private:
  std::optional<std::uint64_t> required_order_;
};

class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Supplied symbols are not (a restriction of) a codeword.
class CorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant that the mathematics guarantees did not hold. Signals a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace convcode
