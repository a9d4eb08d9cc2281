#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments does not hold.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Coefficients that describe no curve at all: all of a, b, c zero, or a
/// circle of zero or imaginary radius.
class DegenerateCircle : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The inputs are valid but the requested object degenerates (a geodesic
/// where a hypercycle was asked for, ...).
class DegenerateResult : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

/// A tolerance-based decision could not separate the candidate answers.
class Indeterminate : public Error {
 public:
  Indeterminate(const std::string& what, std::string first, std::string second)
      : Error(what), first_(std::move(first)), second_(std::move(second)) {}
  const std::string& first_candidate() const { return first_; }
  const std::string& second_candidate() const { return second_; }

 private:
  std::string first_;
  std::string second_;
};

class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t partial)
      : Error(what), partial_(partial) {}
  std::size_t partial_count() const { return partial_; }

 private:
  std::size_t partial_;
};

class SizeGuard : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperk
