#pragma once

#include <stdexcept>
#include <string>

namespace gr1core {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  syntax,
  type,
  prime_placement,
  duplicate_variable,
  empty_spec,
};

/// Frontend diagnostics. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::string message, int line, int column);

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ParseErrorKind kind_;
  int line_;
  int column_;
};

/// An element ID that does not belong to the universe it was used against.
class UnknownElementError : public Error {
 public:
  using Error::Error;
};

/// Core computation was asked to minimize a realizable specification.
class RealizableInputError : public Error {
 public:
  using Error::Error;
};

/// The enumerated state space would exceed the configured cap.
class StateSpaceCapError : public Error {
 public:
  using Error::Error;
};

/// An algorithm precondition does not hold (e.g. criterion fails on the
/// input set, base and minimization set overlap, oracle universe too big).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gr1core
