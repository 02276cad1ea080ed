#pragma once

#include <stdexcept>
#include <string>

namespace mpr {

/// Malformed graph text. Carries the 1-based line number of the offending line
/// (0 when the problem is not tied to a line, e.g. a missing header).
class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Structurally invalid graph (self-loop, duplicate edge, id out of range).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An inequality is violated by at least one matching of the graph.
class InvalidInequalityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An exhaustive scan would exceed a configured size limit.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A construction produced output that fails its own postconditions.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mpr
