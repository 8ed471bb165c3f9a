#pragma once

#include <stdexcept>
#include <string>

namespace fresnel {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from "numerics gave up" can catch the two
/// intermediate classes below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments violate a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not certify its result.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class DomainError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class UnsupportedClosedForm : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// (alpha, theta) outside the region where the stable-mixture identity holds.
class InvalidRegime : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class UnsupportedExponent : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Cylinder event deeper than the tensor quadrature supports.
class DimensionCap : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NonConvergent : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// A power series was asked for an argument outside its working range.
class OutOfSeriesRange : public NonConvergent {
 public:
  using NonConvergent::NonConvergent;
};

class QuadratureFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class RootFindingFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

namespace detail {
/// Throws DomainError "<name> = <value> <requirement>".
[[noreturn]] void throw_domain(const std::string& name, double value,
                               const std::string& requirement);
}  // namespace detail

}  // namespace fresnel
