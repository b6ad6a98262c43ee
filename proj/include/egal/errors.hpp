#pragma once

#include <stdexcept>
#include <string>

namespace egal {

/// Malformed graph, orientation or set-cover text. Carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input is well formed but the request cannot be satisfied for it.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph has no strongly connected orientation (disconnected or has a bridge).
class NotStronglyOrientable : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A guaranteed invariant failed; always an implementation bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace egal
