#pragma once

#include <stdexcept>
#include <string>

namespace unitfrac {

/// Input outside an operation's mathematical domain (q = 0, θ ∉ (0,1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A denominator grew past the caller-supplied decimal digit limit.
class DigitGuardExceeded : public std::runtime_error {
 public:
  DigitGuardExceeded(std::size_t limit, std::size_t digits)
      : std::runtime_error("denominator has " + std::to_string(digits) +
                           " digits, guard is " + std::to_string(limit)),
        limit_(limit),
        digits_(digits) {}

  std::size_t limit() const noexcept { return limit_; }
  std::size_t digits() const noexcept { return digits_; }

 private:
  std::size_t limit_;
  std::size_t digits_;
};

/// A proved identity failed to hold. Always an implementation bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace unitfrac
