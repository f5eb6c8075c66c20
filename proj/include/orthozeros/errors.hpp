#pragma once

#include <stdexcept>
#include <string>

namespace orthozeros {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A parameter violates one of the admissible-range inequalities.
/// The message names the failed inequality, e.g. "alpha > -1".
class ParameterOutOfRange : public Error {
public:
  using Error::Error;
};

/// Degree n < 1.
class DegreeNonPositive : public Error {
public:
  using Error::Error;
};

/// Requested degree/parameters exceed the supported range of the
/// double-precision recurrences (n <= 200, |alpha|,|beta| <= 30).
class Overflow : public Error {
public:
  using Error::Error;
};

/// Evaluation point lies outside the admissible open interval.
class DomainViolation : public Error {
public:
  using Error::Error;
};

/// Operation is not defined for the given polynomial family.
class UnsupportedFamily : public Error {
public:
  using Error::Error;
};

/// Newton refinement failed to converge, or two refined zeros collided.
class ConvergenceFailure : public Error {
public:
  using Error::Error;
};

/// Degree too small for the requested difference order.
class DegreeTooSmall : public Error {
public:
  using Error::Error;
};

/// The cubic j(t) degenerates (z <= 0): oscillation conditions violated.
class DegenerateCubic : public Error {
public:
  using Error::Error;
};

}  // namespace orthozeros
