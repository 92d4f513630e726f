#pragma once

#include <stdexcept>
#include <string>

namespace cuspsemi {

/// Root of every error the toolkit throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on caller-supplied values does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Generators with gcd > 1 have an infinite complement in N.
class GcdNotOne : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Checked 64-bit arithmetic left its range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The truncation horizon is too short to capture what was asked for.
class PrecisionTooSmall : public Error {
 public:
  using Error::Error;
};

/// Monte-Carlo trials with different seeds produced different answers.
class SeedDisagreement : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class MethodMismatch : public Error {
 public:
  using Error::Error;
};

/// The requested construction does not apply to these inputs.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace cuspsemi
