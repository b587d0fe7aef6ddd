#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphsim {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid input data or parameters (malformed files, bad flags,
// disconnected graphs fed to connectivity-requiring operations, ...).
// CLI exit code 2.
class InputError : public Error {
public:
  using Error::Error;
};

// Malformed textual input; carries the byte offset of the offending
// character (0-based) and, when reading a file, the 1-based line number.
class ParseError : public InputError {
public:
  ParseError(const std::string& what, std::size_t byte_offset, long line = -1)
      : InputError(what), byte_offset(byte_offset), line(line) {}

  std::size_t byte_offset;
  long line; // -1 when not associated with a file line
};

// Input exceeds a hard size budget of an exact algorithm. CLI exit code 3.
class BudgetError : public Error {
public:
  using Error::Error;
};

// An iterative numerical method failed to converge. Carries the residual
// at the point of failure. CLI exit code 4.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual(residual) {}

  double residual;
};

} // namespace graphsim
