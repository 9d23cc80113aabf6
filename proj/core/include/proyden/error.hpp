#pragma once

#include <stdexcept>
#include <string>

namespace proyden {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected graph description (disconnected, bad weights, duplicates, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an operation's arguments does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A solve could not be carried out (ill-posed problem, failed level, ...).
class SolveError : public Error {
 public:
  using Error::Error;
};

}  // namespace proyden
