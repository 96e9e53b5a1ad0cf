#pragma once

#include <stdexcept>
#include <string>

namespace richardson {

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// α ≤ β ≤ γ fails, or no sign-correct pairing of the bound projections exists.
class EmptyRichardsonError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A cross-check between two independent computations disagreed.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}
}  // namespace detail

}  // namespace richardson
