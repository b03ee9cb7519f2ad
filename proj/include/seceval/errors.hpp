#pragma once

#include <stdexcept>
#include <string>

namespace seceval {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An argument outside an operation's domain (e.g. marginal cost at t <= 0).
struct DomainError : Error {
  using Error::Error;
};

/// Inconsistent input data (e.g. an alert naming an unknown entity, or a
/// nonzero count with a zero entity denominator).
struct DataError : Error {
  using Error::Error;
};

/// A curve fit with no feasible solution in the search bracket.
struct FitError : Error {
  using Error::Error;
};

/// Invariant violation when constructing a domain type.
struct ValidationError : Error {
  using Error::Error;
};

/// Malformed input file; carries the 1-based line number when known.
struct ParseError : Error {
  explicit ParseError(const std::string& msg, int line = 0)
      : Error(msg), line(line) {}
  int line;
};

}  // namespace seceval
