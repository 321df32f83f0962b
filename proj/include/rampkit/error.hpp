#pragma once

#include <stdexcept>
#include <string>

namespace rampkit {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters or a violated precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An enumeration or verification would exceed a configured size limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rampkit
