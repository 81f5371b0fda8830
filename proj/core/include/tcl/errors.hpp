#ifndef TCL_ERRORS_HPP
#define TCL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcl {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: malformed ring data, wrong variable counts, failed
// preconditions. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// Polynomial text that does not match the grammar. `offset` is a byte
// offset into the parsed string.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A closed-form operation was requested outside the hypotheses under which
// the formula is known to hold.
class LicenseError : public InputError {
 public:
  using InputError::InputError;
};

// An internal consistency check failed (for example a computed reduction
// number disagreeing with its closed form, or a search cap exhausted).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace tcl

#endif  // TCL_ERRORS_HPP
