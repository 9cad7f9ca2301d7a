#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mll {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Structurally invalid serialized input (JSON shape, indices out of range, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A well-formed value handed to an operation whose precondition it violates.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace mll
