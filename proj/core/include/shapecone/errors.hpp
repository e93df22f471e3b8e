#pragma once

#include <stdexcept>
#include <string>

namespace shapecone {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NonPositiveEntry : public Error {
 public:
  using Error::Error;
};

/// An exactly computed object failed a structural property it must have.
/// Indicates a bug in the library, not bad input.
class StructuralViolation : public Error {
 public:
  using Error::Error;
};

class NotInCone : public Error {
 public:
  using Error::Error;
};

class ScaleLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Text that cannot be read as an exact rational. `position()` is the
/// 1-based entry index inside a vector, or 0 for a standalone scalar.
class MalformedEntry : public Error {
 public:
  MalformedEntry(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace shapecone
