#ifndef LIEFOL_ERRORS_HPP
#define LIEFOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liefol {

/// Malformed user input: files, expressions, CLI parameters. CLI exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Expression syntax error carrying the offending 0-based position.
struct ParseError : InputError {
  ParseError(const std::string& what, std::size_t pos)
      : InputError(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// A mathematical precondition failed (dependent generators, all-zero
/// content, non-invariant hyperplane, ...).
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Violated internal invariant (a broken complex and friends). CLI exit code 3.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace liefol

#endif
