#pragma once

#include <complex>
#include <span>
#include <vector>

namespace fresnel::poly {

/// Coefficients in increasing degree: c[0] + c[1] x + ... + c[n] x^n.
using Coefficients = std::vector<double>;

double evaluate(std::span<const double> c, double x);

Coefficients derivative(std::span<const double> c);

/// All complex roots from the eigenvalues of the balanced companion matrix.
/// Leading zero coefficients are trimmed first.
std::vector<std::complex<double>> roots(std::span<const double> c);

/// Root of c in [lo, hi] by Newton steps safeguarded with bisection.
/// Requires a sign change (or an exact zero) across the bracket.
double polish_bracketed(std::span<const double> c, double lo, double hi);

}  // namespace fresnel::poly
