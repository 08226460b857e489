#pragma once

#include <stdexcept>
#include <string>

namespace gsc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (pattern text, sequence files).
class ParseError : public Error {
 public:
  enum class Kind { ragged_lines, illegal_character, too_small, empty_white, malformed_file };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A structural or classification precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The enumeration cap (cells) or the coordinate range would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsc
