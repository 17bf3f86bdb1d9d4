#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brieskorn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or certificate payload. `position` is a 0-based
/// character offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its domain (non-homogeneous input,
/// degree too small, gcd(p,q) != 1, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Incompatible shapes: ring mismatch, matrix row/column mismatch, form
/// degree overflow.
class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace brieskorn
