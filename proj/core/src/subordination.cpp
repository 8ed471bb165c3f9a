#include "fresnel/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "extended.hpp"
#include "fresnel/errors.hpp"
#include "fresnel/fresnel_density.hpp"
#include "fresnel/quadrature.hpp"
#include "fresnel/special_fn.hpp"

namespace fresnel {

using detail::quad_t;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNuTolerance = 1e-12;

/// Peak terms up to 1e20 still leave ~1e-13 absolute accuracy in __float128.
constexpr double kLogSubordinatedPeakLimit = 46.0517;

bool is_cauchy(double nu) { return std::fabs(nu - 1.0) <= kNuTolerance; }

}  // namespace

void SubordinationSpec::validate() const {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    detail::throw_domain("alpha", alpha, "must be finite and > 1");
  }
  if (!(theta > 0.0 && theta < 1.0)) detail::throw_domain("theta", theta, "must lie in (0, 1)");
  if (!(p >= 0.0 && p <= 1.0)) detail::throw_domain("p", p, "must lie in [0, 1]");
  if (nu() > 2.0 + kNuTolerance) {
    throw InvalidRegime("alpha * theta = " + std::to_string(nu()) + " exceeds 2");
  }
}

void StableParams::validate() const {
  if (!(nu > 0.0 && nu <= 2.0)) detail::throw_domain("stable index nu", nu, "must lie in (0, 2]");
  if (nu == 1.0) throw UnsupportedExponent("nu = 1 is outside this parametrization");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    detail::throw_domain("sigma", sigma, "must be finite and > 0");
  }
  if (!(beta >= -1.0 && beta <= 1.0)) detail::throw_domain("beta", beta, "must lie in [-1, 1]");
  if (!std::isfinite(mu)) detail::throw_domain("mu", mu, "must be finite");
}

StableMap parameter_map(const SubordinationSpec& spec) {
  spec.validate();
  const double nu = spec.nu();
  if (is_cauchy(nu)) {
    const double angle = kPi / (2.0 * spec.alpha);
    return CauchyCase{std::sin(angle), std::cos(angle)};
  }
  // At nu = 2 the skewness term beta tan(pi nu / 2) must still equal
  // -tan(pi theta / 2) != 0, which no Gaussian law reproduces.
  if (nu >= 2.0 - kNuTolerance) {
    throw InvalidRegime("alpha * theta = 2: the mixture components are not stable laws of "
                        "index 2 (tan(pi nu / 2) = 0)");
  }
  const double half_theta = 0.5 * kPi * spec.theta;
  double beta = -std::tan(half_theta) / std::tan(0.5 * kPi * nu);
  if (std::fabs(beta) > 1.0 + 1e-12) {
    throw InvalidRegime("alpha = " + std::to_string(spec.alpha) + ", theta = " +
                        std::to_string(spec.theta) + " gives skewness beta = " +
                        std::to_string(beta) + " outside [-1, 1]");
  }
  beta = std::clamp(beta, -1.0, 1.0);
  return StableParams{nu, std::pow(std::cos(half_theta), 1.0 / nu), beta, 0.0};
}

std::complex<double> stable_char_fn(double gamma, const StableParams& params, double t) {
  params.validate();
  if (gamma == 0.0) return {1.0, 0.0};
  const double sgn = gamma > 0.0 ? 1.0 : -1.0;
  const double scale = t * std::pow(params.sigma * std::fabs(gamma), params.nu);
  const std::complex<double> exponent{
      -scale, scale * params.beta * sgn * std::tan(0.5 * kPi * params.nu) + params.mu * t * gamma};
  return std::exp(exponent);
}

std::complex<double> sign_mixture_char_fn(double gamma, const StableParams& params, double p,
                                          double t) {
  return p * stable_char_fn(gamma, params, t) + (1.0 - p) * stable_char_fn(-gamma, params, t);
}

std::complex<double> subordinated_char_fn(double gamma, double t, const SubordinationSpec& spec) {
  spec.validate();
  if (!(t > 0.0)) detail::throw_domain("t", t, "must be > 0");
  if (gamma == 0.0) return {1.0, 0.0};
  const double sgn = gamma > 0.0 ? 1.0 : -1.0;
  const double scale = t * std::pow(std::fabs(gamma), spec.nu());
  const double angle = 0.5 * kPi * spec.theta * sgn;
  const std::complex<double> rotated = std::polar(scale, -angle);
  return spec.p * std::exp(-rotated) + (1.0 - spec.p) * std::exp(-std::conj(rotated));
}

double subordinated_density_series(double x, double t, const SubordinationSpec& spec) {
  spec.validate();
  const double nu = spec.nu();
  if (!(nu > 1.0 + kNuTolerance)) {
    detail::throw_domain("alpha * theta", nu, "must be > 1 for the series");
  }
  if (spec.p != 0.5) detail::throw_domain("p", spec.p, "must be 1/2 for the series");
  if (!(t > 0.0) || !std::isfinite(t)) detail::throw_domain("t", t, "must be finite and > 0");
  if (!std::isfinite(x)) detail::throw_domain("x", x, "must be finite");

  const double t_scale = std::pow(t, 1.0 / nu);
  const double y = x / t_scale;
  const double prefactor = 1.0 / (nu * kPi * t_scale);
  if (y == 0.0) {
    return prefactor * std::tgamma(1.0 / nu) *
           std::sin(kPi * (spec.alpha + 1.0) / (2.0 * spec.alpha));
  }

  const double log_y2 = 2.0 * std::log(std::fabs(y));
  auto log_term = [&](double k) {
    return k * log_y2 - std::lgamma(2.0 * k + 1.0) + std::lgamma((2.0 * k + 1.0) / nu);
  };
  double peak = -INFINITY;
  for (std::size_t k = 0; k < kMaxSeriesTerms; ++k) {
    const double lt = log_term(static_cast<double>(k));
    if (lt < peak - 1.0) break;
    peak = std::max(peak, lt);
  }
  if (peak > kLogSubordinatedPeakLimit) {
    throw OutOfSeriesRange("subordinated series: |x| t^{-1/nu} = " + std::to_string(std::fabs(y)) +
                           " too large for nu = " + std::to_string(nu));
  }

  const quad_t yq2 = static_cast<quad_t>(y) * static_cast<quad_t>(y);
  const quad_t nuq = static_cast<quad_t>(spec.alpha) * static_cast<quad_t>(spec.theta);
  const quad_t ratio = (static_cast<quad_t>(spec.alpha) + 1) / (2 * static_cast<quad_t>(spec.alpha));
  quad_t sum = 0;
  for (std::size_t k = 0; k < kMaxSeriesTerms; ++k) {
    const quad_t j = static_cast<quad_t>(2 * k);
    const quad_t magnitude =
        expq(static_cast<quad_t>(k) * logq(yq2) - lgammaq(j + 1) + lgammaq((j + 1) / nuq));
    sum += magnitude * detail::sin_pi_q((j + 1) * ratio);
    const double lt = log_term(static_cast<double>(k));
    if (lt < peak - 90.0 && lt < -80.0) return prefactor * static_cast<double>(sum);
  }
  throw NonConvergent("subordinated series: no convergence within the term cap");
}

double subordinated_density_quadrature(double x, double t, const SubordinationSpec& spec,
                                       double tol) {
  spec.validate();
  if (!(t > 0.0) || !std::isfinite(t)) detail::throw_domain("t", t, "must be finite and > 0");
  if (!std::isfinite(x)) detail::throw_domain("x", x, "must be finite");
  if (!(tol > 0.0)) detail::throw_domain("tol", tol, "must be > 0");

  const double alpha = spec.alpha;
  const double theta = spec.theta;
  // Integrand in v = log s: s u(x, s) h(s, t). Up to a constant its magnitude
  // is bounded by s^{1 - 1/alpha} h times the growth of Ai_alpha(-z),
  // z^{(2 - alpha) / (2 (alpha - 1))}, which only matters for alpha < 2.
  const double growth = alpha < 2.0 ? (2.0 - alpha) / (2.0 * (alpha - 1.0)) : 0.0;
  auto envelope = [&](double v) {
    const double s = std::exp(v);
    const double h = stable_subordinator_pdf(s, t, theta);
    if (h == 0.0) return 0.0;
    const double z = std::fabs(x) / std::pow(alpha * s, 1.0 / alpha);
    return std::exp((1.0 - 1.0 / alpha) * v) * h * std::max(1.0, std::pow(z, growth));
  };

  const double v_center = std::log(t) / theta;
  double peak = envelope(v_center);
  double v_lo = v_center;
  while (true) {
    v_lo -= 0.5;
    const double e = envelope(v_lo);
    peak = std::max(peak, e);
    if (e < 1e-18 * peak) break;
  }
  auto integrand = [&](double v) {
    // Far below the window the bound alone settles it; Ai_alpha there is costly.
    if (v < v_lo + 0.5 && envelope(v) < 1e-20 * peak) return 0.0;
    const double s = std::exp(v);
    const double h = stable_subordinator_pdf(s, t, theta);
    if (h == 0.0) return 0.0;
    return s * h * density(x, {alpha, spec.p, s});
  };
  // Upper tail decays like s^{-theta - 1/alpha}.
  double v_hi = v_center;
  while (true) {
    v_hi += 1.0;
    const double e = envelope(v_hi);
    peak = std::max(peak, e);
    if (e < 1e-16 * peak) break;
  }
  // Remaining tail: s u h ~ e^{-(theta + 1/alpha) v}, integrated analytically.
  const double decay = theta + 1.0 / alpha;
  const double tail = integrand(v_hi) / decay;

  const quad::Tolerance panel_tol{0.05 * tol, 1e-12};
  double total = tail;
  for (double lo = v_lo; lo < v_hi; lo += 1.0) {
    total += quad::integrate(integrand, lo, std::min(lo + 1.0, v_hi), panel_tol,
                             "subordination integral");
  }
  return total;
}

double subordinated_weibull_repr(double x, double t, const SubordinationSpec& spec) {
  spec.validate();
  if (!(spec.nu() > 1.0 + kNuTolerance)) {
    detail::throw_domain("alpha * theta", spec.nu(), "must be > 1");
  }
  if (spec.p != 0.5) detail::throw_domain("p", spec.p, "must be 1/2");
  if (!(t > 0.0)) detail::throw_domain("t", t, "must be > 0");
  return weibull_sine_expectation(x, spec.alpha, 0.5, {spec.nu(), 1.0 / t});
}

}  // namespace fresnel
