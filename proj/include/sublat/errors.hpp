#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sublat {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two permutations (or a permutation and a group) disagree on degree.
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument expected to be a subgroup (or an element) of G is not.
class NotSubgroup : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (enumeration, coset action, lattice order) was hit.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters for a constructor or formula.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed group descriptor text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& input)
      : Error("parse error at position " + std::to_string(position) + " in '" + input +
              "': expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// An internal consistency check failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace sublat
