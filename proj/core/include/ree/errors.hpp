#pragma once

#include <stdexcept>
#include <string>

namespace ree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class WrongDimension : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A value violates the invariants of the type it was meant to construct.
class InvalidState : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Input sits on a boundary where the closed-form expressions are 0/0.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class UnsupportedCoherence : public Error {
 public:
  using Error::Error;
};

/// A two-qubit matrix does not follow the rank-2 X-state pattern.
class NotInFamily : public Error {
 public:
  NotInFamily(const std::string& what, double max_deviation)
      : Error(what), max_deviation_(max_deviation) {}

  double max_deviation() const noexcept { return max_deviation_; }

 private:
  double max_deviation_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ree
