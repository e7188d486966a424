#pragma once

#include <stdexcept>
#include <string>

namespace tk {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown ids, broken invariants, unparsable files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured instance-size cap.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace tk
