// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RPBEAM_TYPES_HPP_
#define RPBEAM_TYPES_HPP_

#include <complex>
#include <stdexcept>
#include <string>

namespace rpbeam {

using cdouble = std::complex<double>;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument values or malformed configuration.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Array/matrix dimension disagreement.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// Input is mathematically degenerate for the requested operation
// (zero trace, silent source, coincident geometry, ...).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// A numerical procedure broke down (singular solve, non-positive
// quadratic form, all-NaN cell).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// A distortion-based bound is vacuous (delta >= 1); callers must see
// this rather than a silently clamped interval.
class BoundVacuous : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rpbeam

#endif  // RPBEAM_TYPES_HPP_
