#pragma once

#include <stdexcept>
#include <string>

namespace prefixnet {

/// Base class for every error raised by the library. Callers that only need
/// to distinguish "bad input" from programming errors can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition or type invariant.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// No prefix code exists for the requested lengths.
class KraftViolation : public Error {
 public:
  using Error::Error;
};

/// A precondition of a check (rather than of the input type) does not hold,
/// e.g. asking whether Kraft survives a larger alphabet when it already fails.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Graph is disconnected where a connected one is required.
class Disconnected : public Error {
 public:
  using Error::Error;
};

/// Combinatorial enumeration refused because the instance is too large.
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

/// KL divergence is infinite: the reference distribution has zero mass where
/// the other does not.
class InfiniteDivergence : public Error {
 public:
  using Error::Error;
};

/// A codeword addresses a node that the embedded tree does not have.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace prefixnet
