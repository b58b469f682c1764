#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsj {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: index out of range, dimension mismatch, malformed cover.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A support set violating 0 ∉ F, F ≠ ∅ or the dimension contract.
class InvalidSupport : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Syntax errors in polynomial or JSON input. `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its precondition (e.g. reconstruction of
/// a support whose semigroup ideal is not Jacobian).
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed, or reconstruction ran out of choices on a
/// Jacobian support.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tsj
