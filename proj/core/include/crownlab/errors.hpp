#pragma once

#include <stdexcept>
#include <string>

namespace crownlab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside an operation's domain: bad crown parameters, role
/// mismatches, pairs that are not critical pairs, malformed cycles.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An explicit resource guard was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A postcondition the library guarantees was violated. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace crownlab
