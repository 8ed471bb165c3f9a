#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>

namespace fresnel::quad {

using Integrand = std::function<double(double)>;

struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-12;

  double bound(double value) const;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Global-adaptive Gauss-Kronrod (21-point rule) on a finite interval.
/// The segment with the largest error estimate is bisected until the total
/// estimate falls under `tol.bound(value)` or `max_segments` is reached.
Result adaptive(const Integrand& f, double a, double b, Tolerance tol,
                std::size_t max_segments = 4000);

/// Same as `adaptive` but throws QuadratureFailure when not converged.
/// `what` is prefixed to the error message.
double integrate(const Integrand& f, double a, double b, Tolerance tol,
                 std::string_view what = "quadrature");

/// Fixed 30-point Gauss-Legendre panel.
double gauss_legendre(const Integrand& f, double a, double b);

struct Extrapolation {
  double value = 0.0;
  double error = 0.0;
};

/// Wynn's epsilon algorithm applied to a sequence of partial sums. The
/// returned error is the distance between the two most recent entries of
/// the best even column.
Extrapolation wynn_epsilon(std::span<const double> partial_sums);

}  // namespace fresnel::quad
