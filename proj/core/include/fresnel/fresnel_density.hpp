#pragma once

// Signed densities of the Fresnel pseudoprocess of order 2 alpha:
//
//   u(x, t) = c^{-1} [ p Ai_alpha(-x / c) + (1 - p) Ai_alpha(x / c) ],
//   c = (alpha t)^{1/alpha},
//
// with Fourier transform p e^{i sgn(g) |g|^alpha t} + (1 - p) e^{-i sgn(g) |g|^alpha t}.
// p = 1/2 is the symmetric kernel with transform cos(|g|^alpha t).

#include <complex>
#include <cstddef>
#include <span>

#include "fresnel/rng.hpp"
#include "fresnel/special_fn.hpp"

namespace fresnel {

struct PseudoParams {
  double alpha = 2.0;  ///< > 1
  double p = 0.5;      ///< in [0, 1]
  double t = 1.0;      ///< > 0

  /// Throws DomainError on any violated bound.
  void validate() const;
};

struct OscillationConstants {
  double a_alpha;  ///< cos(pi / 2 alpha)
  double b_alpha;  ///< sin(pi / 2 alpha)
};

OscillationConstants oscillation_constants(double alpha);

enum class DensityMethod {
  kAuto,        ///< series inside its working range, Airy quadrature outside
  kSeries,      ///< power series in x / c; throws OutOfSeriesRange outside
  kAiry,        ///< composition of Ai_alpha evaluated by oscillatory quadrature
  kClosedForm,  ///< alpha = 2, p = 1/2 only: cos(x^2/4t - pi/4) / (2 sqrt(pi t))
};

double density(double x, const PseudoParams& params, DensityMethod method = DensityMethod::kAuto);

/// Signed distribution function int_{-inf}^x u(y, t) dy; 0 at -inf, 1 at +inf.
double signed_cdf(double x, const PseudoParams& params);

std::complex<double> char_fn(double gamma, const PseudoParams& params);

/// (1 / pi x) E[ sin(a x G) (p e^{b x G} + (1 - p) e^{-b x G}) ] with
/// G ~ Weibull(shape alpha, scale 1/t), evaluated by quadrature.
/// Throws DomainError at x = 0; the density there is density(0, params).
double weibull_representation(double x, const PseudoParams& params);

/// (1 / pi x) E[ sin(a x G) (p e^{b x G} + (1 - p) e^{-b x G}) ] for
/// a = cos(pi / 2 alpha), b = sin(pi / 2 alpha) and an arbitrary Weibull law
/// of G, by panel quadrature between the zeros of the sine.
double weibull_sine_expectation(double x, double alpha, double p, WeibullParams law);

struct MonteCarloEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Same expectation estimated from n inverse-CDF Weibull draws.
MonteCarloEstimate weibull_representation_mc(double x, const PseudoParams& params,
                                             std::size_t n, SeededStream stream);

/// max over the grid of |d^2/dt^2 char_fn + |g|^{2 alpha} char_fn|, with the
/// time derivative taken by central differences of step h.
double pde_fourier_residual(std::span<const double> gamma_grid, const PseudoParams& params,
                            double h = 1e-3);

}  // namespace fresnel
