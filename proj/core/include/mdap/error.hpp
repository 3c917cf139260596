#pragma once

#include <stdexcept>
#include <string>

namespace mdap {

// Base class of every error raised by the library. The CLI maps each
// subclass to its own exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPointError : public Error {
 public:
  using Error::Error;
};

class InvalidIndexError : public Error {
 public:
  using Error::Error;
};

class FeasibilityError : public Error {
 public:
  using Error::Error;
};

// Malformed instance, matrix or CS file contents.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Problem too large for the requested operation (search budget, memory
// guard, brute-force AP oracle).
class SizeError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamilyError : public Error {
 public:
  using Error::Error;
};

class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mdap
