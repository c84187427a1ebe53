#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text: expressions, graph files, paths, field specs.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " at position " + std::to_string(position)),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its precondition (not a path, not a
/// source loop, mismatched fields, level out of range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A divisibility equation has no solution.
class NoSolutionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A post-check failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lpa
