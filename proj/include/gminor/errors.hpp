#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gminor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input bytes. `offset()` is the byte offset where parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Well-formed input whose declared counts disagree with its content.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the operation's domain (edge not in graph, wrong class, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold (e.g. a pair that is not a diameter pair).
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input exceeds a configured size cap of an exponential-time routine.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A witness structure that is not a valid family of bags.
class InvalidStructureError : public Error {
 public:
  using Error::Error;
};

/// Parameter combination the polynomial algorithms do not handle.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace gminor
