#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ldv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad syntax, arity mismatch, violated
// preconditions on matrices and faces.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// The computation ran but the mathematics does not permit an answer
// (e.g. too few nonzero coefficients for a radius estimate).
class MathError : public Error {
 public:
  using Error::Error;
};

// Gröbner S-pair budget exhausted.
class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ldv
