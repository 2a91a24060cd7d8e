#pragma once

#include <stdexcept>
#include <string>

namespace chern {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring, polynomial or ideal text. `position` is a 0-based byte
/// offset into the input, or npos when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = std::string::npos)
      : Error(position == std::string::npos
                  ? what
                  : what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("ring mismatch") {}
};

/// A configurable computational cap (S-pair count, retry count) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An integer series did not agree with any polynomial on the required window.
class NotStabilized : public Error {
 public:
  using Error::Error;
};

/// The input is valid but outside what the algorithms support
/// (non-monomial filtration, non-homogeneous invariant input).
class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& what) : Error("unsupported: " + what) {}
};

/// An operation precondition does not hold (unit ideal, zero divisor ideal,
/// positive-dimensional input to an Artinian routine, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace chern
