#pragma once

#include <stdexcept>
#include <string>

namespace lexeval {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable file, bad invocation.
class IoError : public Error {
 public:
  using Error::Error;
};

// Input record that violates a documented invariant.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexeval
