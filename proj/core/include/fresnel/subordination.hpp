#pragma once

// The pseudoprocess of order 2 alpha evaluated at an independent
// theta-stable subordinator S_theta(t). The time-changed process is a genuine
// random variable: a sign mixture of an asymmetric nu = alpha theta stable law
// (or of two Cauchy laws when nu = 1).

#include <complex>
#include <variant>

namespace fresnel {

struct SubordinationSpec {
  double alpha = 2.0;  ///< > 1
  double theta = 0.5;  ///< in (0, 1)
  double p = 0.5;      ///< in [0, 1]

  double nu() const { return alpha * theta; }

  /// Throws DomainError on bad alpha, theta or p, InvalidRegime if nu > 2.
  void validate() const;
};

/// Stable law with characteristic function
///   exp(-t sigma^nu |g|^nu (1 - i beta sgn(g) tan(pi nu / 2)) + i mu t g).
struct StableParams {
  double nu = 1.5;     ///< in (0, 2], != 1
  double sigma = 1.0;  ///< > 0
  double beta = 0.0;   ///< in [-1, 1]
  double mu = 0.0;

  /// Throws DomainError, or UnsupportedExponent for nu = 1.
  void validate() const;
};

/// nu = 1: the two mixture components are Cauchy laws with location
/// +-t * location and scale t * scale.
struct CauchyCase {
  double location;  ///< sin(pi / 2 alpha)
  double scale;     ///< cos(pi / 2 alpha)
};

using StableMap = std::variant<StableParams, CauchyCase>;

/// nu = alpha theta, beta = -tan(pi theta / 2) / tan(pi nu / 2),
/// sigma = cos(pi theta / 2)^{1/nu}, mu = 0. CauchyCase at nu = 1.
/// Throws InvalidRegime when nu >= 2 or |beta| > 1.
StableMap parameter_map(const SubordinationSpec& spec);

std::complex<double> stable_char_fn(double gamma, const StableParams& params, double t);

/// p * CF(H) + (1 - p) * CF(-H) for H with the given stable law at time t.
std::complex<double> sign_mixture_char_fn(double gamma, const StableParams& params, double p,
                                          double t);

/// E exp(i g Y(t)) = p exp(-t |g|^nu e^{-i pi theta sgn(g) / 2})
///             + (1 - p) exp(-t |g|^nu e^{+i pi theta sgn(g) / 2}).
std::complex<double> subordinated_char_fn(double gamma, double t, const SubordinationSpec& spec);

/// Even power series of the symmetric (p = 1/2) density, summed in extended
/// precision. Requires nu > 1; throws OutOfSeriesRange when cancellation
/// would cost more than ~1e-13 absolute accuracy.
double subordinated_density_series(double x, double t, const SubordinationSpec& spec);

/// int_0^inf u(x, s) h_theta(s, t) ds by quadrature in log s.
double subordinated_density_quadrature(double x, double t, const SubordinationSpec& spec,
                                       double tol = 1e-10);

/// (1 / pi x) E[ sin(a x G) cosh(b x G) ] with G ~ Weibull(shape nu, scale 1/t).
/// Requires nu > 1, p = 1/2, x != 0.
double subordinated_weibull_repr(double x, double t, const SubordinationSpec& spec);

}  // namespace fresnel
