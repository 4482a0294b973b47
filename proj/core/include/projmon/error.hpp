#pragma once

#include <stdexcept>
#include <string>

namespace projmon {

/// Invalid input or a failed precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result that contradicts a proven structural property; indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// An operation needed a finite monoid but closure stopped at its cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace projmon
