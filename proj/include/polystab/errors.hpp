#pragma once

#include <stdexcept>
#include <string>

namespace polystab {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The input violates an operation's precondition (improper ideal, ambient
/// mismatch, non-polymatroidal input where the theory requires one, ...).
struct PreconditionError : Error {
  using Error::Error;
};

/// Exponent arithmetic would exceed the fixed-width exponent type.
struct OverflowError : Error {
  using Error::Error;
};

/// A prefix colon in a linear-quotient ordering is not generated by
/// variables, under every ordering convention this library tries.
struct ColonNotLinearError : Error {
  using Error::Error;
};

/// Two supposedly equivalent computation routes disagree.  Never swallowed:
/// it is either a bug or a brand-new counterexample, and both demand a dump.
struct CrossCheckError : Error {
  using Error::Error;
};

/// Syntax error in the ideal text format, with a 1-based source position.
struct ParseError : Error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& message)
      : Error("line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + message),
        line(line_),
        column(column_) {}
};

}  // namespace polystab
