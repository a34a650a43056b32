#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmclass {

/// The zero series has no a-invariant or initial degree.
class ZeroSeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series with a negative Taylor coefficient cannot be the Hilbert series of a module.
class NegativeCoefficientError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The expression lies outside the grammar the built-in CM criteria can decide.
class UndecidableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two independent routes disagreed. Always a bug, never a mathematical outcome.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A hard invariant (conic => CM, Serre soundness, ...) was violated.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An explicit enumeration went past its configured step budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  /// 1-based character position.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cmclass
