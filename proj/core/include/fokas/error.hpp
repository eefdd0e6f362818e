#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace fokas {

using Complex = std::complex<double>;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degenerate or inconsistent contour geometry.
class InvalidGeometry : public Error {
 public:
  using Error::Error;
};

// The integrand returned a non-finite value at a quadrature node.
class IntegrandSingularity : public Error {
 public:
  IntegrandSingularity(const std::string& what, Complex point)
      : Error(what), point_(point) {}
  Complex point() const { return point_; }

 private:
  Complex point_;
};

// A quadrature (or nested quadrature) failed to meet its tolerance.
class Unconverged : public Error {
 public:
  Unconverged(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

// Argument outside the mathematical domain of an operation (t < 0,
// evaluation at a pole of a symbol or kernel, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Data violates the boundary/nonlocal conditions an operation requires.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& condition, double measured)
      : Error("precondition violated: " + condition), condition_(condition),
        measured_(measured) {}
  const std::string& condition() const { return condition_; }
  double measured() const { return measured_; }

 private:
  std::string condition_;
  double measured_;
};

// No value of the rho ladder could be certified.
class SelectionFailure : public Error {
 public:
  using Error::Error;
};

// Finite-difference oracle problems.
class DiscretizationError : public Error {
 public:
  using Error::Error;
};

class SchemeFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace fokas
