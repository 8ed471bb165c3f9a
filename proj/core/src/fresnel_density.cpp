#include "fresnel/fresnel_density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fresnel/errors.hpp"
#include "fresnel/quadrature.hpp"
#include "fresnel/special_fn.hpp"

namespace fresnel {

namespace {

constexpr double kPi = std::numbers::pi;

double time_scale(const PseudoParams& params) {
  return std::pow(params.alpha * params.t, 1.0 / params.alpha);
}

double series_density(double x, const PseudoParams& params, const GeneralizedAiry& ai) {
  const double c = time_scale(params);
  return ai.weighted_series(x / c, 1.0, 1.0 - 2.0 * params.p) / c;
}

double airy_density(double x, const PseudoParams& params, const GeneralizedAiry& ai) {
  const double c = time_scale(params);
  const double z = x / c;
  const double left = params.p == 0.0 ? 0.0 : ai.quadrature(-z);
  const double right = params.p == 1.0 ? 0.0 : ai.quadrature(z);
  return (params.p * left + (1.0 - params.p) * right) / c;
}

/// Weibull-weighted integrand in log form so e^{b x y} never overflows alone.
struct WeibullIntegrand {
  double x;
  double p;
  double a;
  double b;
  double shape;
  double rate;  // 1 / scale

  double operator()(double y) const {
    if (y <= 0.0) return 0.0;
    const double log_g =
        std::log(shape * rate) + (shape - 1.0) * std::log(y) - rate * std::pow(y, shape);
    const double bxy = b * x * y;
    double weight = 0.0;
    if (p > 0.0) weight += p * std::exp(log_g + bxy);
    if (p < 1.0) weight += (1.0 - p) * std::exp(log_g - bxy);
    return std::sin(a * x * y) * weight;
  }
};

}  // namespace

void PseudoParams::validate() const {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    detail::throw_domain("alpha", alpha, "must be finite and > 1");
  }
  if (!(p >= 0.0 && p <= 1.0)) detail::throw_domain("p", p, "must lie in [0, 1]");
  if (!(t > 0.0) || !std::isfinite(t)) detail::throw_domain("t", t, "must be finite and > 0");
}

OscillationConstants oscillation_constants(double alpha) {
  if (!(alpha > 1.0)) detail::throw_domain("alpha", alpha, "must be > 1");
  const double angle = kPi / (2.0 * alpha);
  return {std::cos(angle), std::sin(angle)};
}

double density(double x, const PseudoParams& params, DensityMethod method) {
  params.validate();
  if (std::isnan(x)) detail::throw_domain("x", x, "must not be NaN");
  if (method == DensityMethod::kClosedForm) {
    if (params.alpha != 2.0 || params.p != 0.5) {
      throw UnsupportedClosedForm("closed form exists only for alpha = 2, p = 1/2");
    }
    const double t = params.t;
    return std::cos(x * x / (4.0 * t) - 0.25 * kPi) / (2.0 * std::sqrt(kPi * t));
  }
  const GeneralizedAiry ai = generalized_airy(AiryOrder(params.alpha));
  switch (method) {
    case DensityMethod::kSeries:
      return series_density(x, params, ai);
    case DensityMethod::kAiry:
      return airy_density(x, params, ai);
    default:
      break;
  }
  if (!std::isfinite(x)) return 0.0;
  return ai.in_series_range(x / time_scale(params)) ? series_density(x, params, ai)
                                                    : airy_density(x, params, ai);
}

double signed_cdf(double x, const PseudoParams& params) {
  params.validate();
  if (std::isnan(x)) detail::throw_domain("x", x, "must not be NaN");
  if (x == INFINITY) return 1.0;
  if (x == -INFINITY) return 0.0;
  const GeneralizedAiry ai = generalized_airy(AiryOrder(params.alpha));
  const double z = x / time_scale(params);
  const double q = 1.0 - params.p;
  if (ai.in_series_range(z)) {
    return 0.5 + (q - params.p) / (2.0 * params.alpha) +
           ai.weighted_integral_series(z, 1.0, q - params.p);
  }
  // p (1 - Phi(-z)) + q Phi(z)
  const double left = params.p == 0.0 ? 0.0 : params.p * (1.0 - ai.integral_quadrature(-z));
  const double right = q == 0.0 ? 0.0 : q * ai.integral_quadrature(z);
  return left + right;
}

std::complex<double> char_fn(double gamma, const PseudoParams& params) {
  params.validate();
  const double phase = std::copysign(std::pow(std::fabs(gamma), params.alpha) * params.t, gamma);
  if (params.p == 0.5) return {std::cos(phase), 0.0};
  const double c = std::cos(phase);
  const double s = std::sin(phase);
  return {c, (2.0 * params.p - 1.0) * s};
}

double weibull_sine_expectation(double x, double alpha, double p, WeibullParams law) {
  if (x == 0.0 || !std::isfinite(x)) {
    detail::throw_domain("x", x, "must be finite and nonzero (use density(0) at the origin)");
  }
  if (!(law.shape > 1.0)) detail::throw_domain("weibull shape", law.shape, "must be > 1");
  if (!(law.scale > 0.0)) detail::throw_domain("weibull scale", law.scale, "must be > 0");
  const auto [a, b] = oscillation_constants(alpha);
  const double shape = law.shape;
  const double rate = 1.0 / law.scale;
  const WeibullIntegrand f{x, p, a, b, shape, rate};

  // The exponent b|x|y - rate y^shape peaks at y_peak; integrate until it has
  // dropped 60 e-folds below max(peak, 0).
  const double bx = b * std::fabs(x);
  const double y_peak = std::pow(bx / (shape * rate), 1.0 / (shape - 1.0));
  const double e_peak = bx * y_peak - rate * std::pow(y_peak, shape);
  auto exponent = [&](double y) { return bx * y - rate * std::pow(y, shape); };
  double y_max = std::max({1.0, 2.0 * y_peak, std::pow(law.scale, 1.0 / shape)});
  while (exponent(y_max) + (shape - 1.0) * std::log(y_max) > std::min(e_peak, 0.0) - 60.0) {
    y_max *= 1.5;
  }

  // Panels at the zeros of sin(a x y) keep each GK segment non-oscillatory.
  const double half_wave = kPi / (a * std::fabs(x));
  const double scale = std::exp(std::max(e_peak, 0.0));
  const quad::Tolerance tol{1e-16 * scale, 1e-13};
  double total = 0.0;
  for (double lo = 0.0; lo < y_max; lo += half_wave) {
    const double hi = std::min(lo + half_wave, y_max);
    total += quad::integrate(f, lo, hi, tol, "weibull expectation");
  }
  return total / (kPi * x);
}

double weibull_representation(double x, const PseudoParams& params) {
  params.validate();
  return weibull_sine_expectation(x, params.alpha, params.p, {params.alpha, 1.0 / params.t});
}

MonteCarloEstimate weibull_representation_mc(double x, const PseudoParams& params, std::size_t n,
                                             SeededStream stream) {
  params.validate();
  if (x == 0.0 || !std::isfinite(x)) {
    detail::throw_domain("x", x, "must be finite and nonzero (use density(0) at the origin)");
  }
  if (n == 0) throw DomainError("monte carlo sample count must be >= 1");
  const auto [a, b] = oscillation_constants(params.alpha);
  const double tau = 1.0 / params.t;
  Rng rng(stream);
  // Welford running mean and variance.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double g = std::pow(tau * rng.exponential(), 1.0 / params.alpha);
    const double bxg = b * x * g;
    const double value = std::sin(a * x * g) *
                         (params.p * std::exp(bxg) + (1.0 - params.p) * std::exp(-bxg)) /
                         (kPi * x);
    const double delta = value - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (value - mean);
  }
  const double variance = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
  return {mean, std::sqrt(variance / static_cast<double>(n)), n};
}

double pde_fourier_residual(std::span<const double> gamma_grid, const PseudoParams& params,
                            double h) {
  params.validate();
  if (gamma_grid.empty()) throw DomainError("pde_fourier_residual: empty gamma grid");
  if (!(h > 0.0 && h < params.t)) detail::throw_domain("step h", h, "must lie in (0, t)");
  PseudoParams minus = params;
  PseudoParams plus = params;
  minus.t -= h;
  plus.t += h;
  double worst = 0.0;
  for (const double g : gamma_grid) {
    const std::complex<double> mid = char_fn(g, params);
    const std::complex<double> second =
        (char_fn(g, plus) - 2.0 * mid + char_fn(g, minus)) / (h * h);
    const double residual =
        std::abs(second + std::pow(std::fabs(g), 2.0 * params.alpha) * mid);
    worst = std::max(worst, residual);
  }
  return worst;
}

}  // namespace fresnel
