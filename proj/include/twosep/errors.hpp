#pragma once

#include <stdexcept>
#include <string>

namespace twosep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a precondition (bad label, loop edge, wrong side...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not. Always a bug somewhere.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace twosep
