#pragma once

// Generalized Airy functions
//
//   Ai_alpha(x) = (1/pi) int_0^inf cos(s x + s^alpha / alpha) ds,  alpha > 1,
//
// their antiderivatives, the Weibull density, and the Wright function branch
// W_{-theta, 1-theta} that gives the density of a theta-stable subordinator.

#include <cstddef>
#include <memory>

namespace fresnel {

/// Order alpha > 1 of a generalized Airy function.
class AiryOrder {
 public:
  /// Throws DomainError unless alpha > 1 and finite.
  explicit AiryOrder(double alpha);

  double value() const { return alpha_; }

 private:
  double alpha_;
};

/// Weibull law with density shape * y^{shape-1} / scale * exp(-y^shape / scale).
struct WeibullParams {
  double shape = 1.0;  ///< gamma > 0
  double scale = 1.0;  ///< tau > 0, in units of y^shape
};

/// Argument of W_{-theta, 1-theta}(z).
struct WrightArgs {
  double theta = 0.5;  ///< in (0, 1)
  double z = 0.0;      ///< evaluated for z <= 0
};

inline constexpr std::size_t kMaxSeriesTerms = 10000;

/// Power series of Ai_alpha summed in extended precision until the tail bound
/// drops below `tol`. Throws OutOfSeriesRange beyond airy_series_range().
double airy_series(double x, AiryOrder order, double tol = 1e-16);

/// Oscillatory quadrature of the defining integral.
double airy_quadrature(double x, AiryOrder order, double tol = 1e-13);

/// |x| bound inside which airy_series is accurate to ~1e-15.
double airy_series_range(AiryOrder order);

/// Ai_alpha(x), series inside the working range and quadrature outside.
double airy(double x, AiryOrder order);

/// int_{-inf}^x Ai_alpha(y) dy. Tends to 0 and 1 at -inf and +inf.
double airy_integral(double x, AiryOrder order);

/// Ai_alpha with its coefficient table built once. Copies share the
/// immutable table, so instances are cheap to pass around and thread safe.
class GeneralizedAiry {
 public:
  explicit GeneralizedAiry(AiryOrder order);

  double alpha() const;
  double series_range() const;
  bool in_series_range(double x) const;

  double operator()(double x) const;
  double series(double x, double tol = 1e-16) const;
  double quadrature(double x, double tol = 1e-13) const;

  /// sum_k c_k x^k w_k with w_k = even_weight for even k, odd_weight for odd.
  /// With (1, 1) this is Ai_alpha(x); with (p + q, q - p) it is
  /// p Ai_alpha(-x) + q Ai_alpha(x).
  double weighted_series(double x, double even_weight, double odd_weight) const;

  /// sum_k c_k x^{k+1} / (k+1) w_k, the weighted antiderivative from 0.
  double weighted_integral_series(double x, double even_weight, double odd_weight) const;

  /// int_{-inf}^x Ai_alpha.
  double integral(double x) const;
  double integral_quadrature(double x, double tol = 1e-13) const;

  struct Table;  // opaque coefficient table

 private:
  std::shared_ptr<const Table> table_;
};

/// Instance for `order` from a small per-thread cache, so repeated calls with
/// the same order skip rebuilding the coefficient table.
GeneralizedAiry generalized_airy(AiryOrder order);

/// 1 / Gamma(z), entire; exactly zero at the non-positive integers.
double reciprocal_gamma(double z);

/// Throws DomainError for y <= 0 or invalid parameters.
double weibull_pdf(double y, WeibullParams params);

/// Plain series sum_k z^k / (k! Gamma(1 - theta - theta k)).
/// Throws NonConvergent past kMaxSeriesTerms, or when cancellation would
/// leave fewer than ~12 correct digits.
double wright_series(WrightArgs args);

/// W_{-theta,1-theta}(z) for z <= 0: the series for moderate |z| and an
/// integral representation of the stable law for large |z|.
double wright_function(WrightArgs args);

/// Density of S_theta(t), E exp(-lambda S_theta(t)) = exp(-t lambda^theta):
///   h(x, t) = theta t / x^{theta+1} W_{-theta,1-theta}(-t / x^theta).
/// Throws DomainError for x <= 0.
double stable_subordinator_pdf(double x, double t, double theta);

}  // namespace fresnel
