#pragma once

#include <stdexcept>
#include <string>

namespace spinal {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called on input that violates its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A brute-force search was asked to go beyond its configured bounds. This is
// not a negative answer: the question was simply not decided.
class SearchBoundExceeded : public Error {
 public:
  explicit SearchBoundExceeded(const std::string& what)
      : Error("search bound exceeded: " + what) {}
};

// Two independent decision paths disagreed.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace spinal
