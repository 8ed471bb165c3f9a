#include <cmath>
#include <numbers>
#include <string>

#include "extended.hpp"
#include "fresnel/errors.hpp"
#include "fresnel/quadrature.hpp"
#include "fresnel/special_fn.hpp"

namespace fresnel {

using detail::quad_t;

namespace {

void check_theta(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    detail::throw_domain("stable index theta", theta, "must lie in (0, 1)");
  }
}

/// Switch to the integral representation once the series would cancel
/// more than this many digits.
constexpr double kLogSeriesCancellation = 10.0 * std::numbers::ln10;

// W_{-theta,1-theta}(-y), y > 0, from the Zolotarev-Kanter representation of
// the one-sided stable law:
//   W(-y) = y^{theta/(1-theta)} / ((1-theta) pi)
//           * int_0^pi a(u) exp(-a(u) y^{1/(1-theta)}) du,
//   a(u) = (sin(theta u) / sin u)^{1/(1-theta)} sin((1-theta) u) / sin(theta u).
double wright_integral(double theta, double y) {
  const double q = 1.0 / (1.0 - theta);
  const double scale = std::pow(y, q);
  auto a = [theta, q](double u) {
    return std::pow(std::sin(theta * u) / std::sin(u), q) * std::sin((1.0 - theta) * u) /
           std::sin(theta * u);
  };
  auto integrand = [&](double u) {
    const double au = a(u);
    const double exponent = au * scale;
    if (!std::isfinite(au) || exponent > 745.0) return 0.0;
    return au * std::exp(-exponent);
  };
  // Bulk of the mass sits where a(u) y^q is O(1); a is increasing on (0, pi).
  const double value = quad::integrate(integrand, 0.0, std::numbers::pi, {1e-300, 1e-13},
                                       "wright integral");
  return std::pow(y, theta * q) / ((1.0 - theta) * std::numbers::pi) * value;
}

/// ln of the largest term magnitude of the series at z.
double log_series_peak(double theta, double z) {
  if (z == 0.0) return -std::lgamma(1.0 - theta);
  const double lz = std::log(std::fabs(z));
  double peak = -INFINITY;
  double previous = -INFINITY;
  for (std::size_t k = 0; k < kMaxSeriesTerms; ++k) {
    const double kd = static_cast<double>(k);
    const double lt = kd * lz - std::lgamma(kd + 1.0) + std::lgamma(theta * (kd + 1.0));
    peak = std::max(peak, lt);
    if (k > 2 && lt < previous && lt < peak - 80.0) break;
    previous = lt;
  }
  return peak;
}

}  // namespace

double wright_series(WrightArgs args) {
  const double theta = args.theta;
  const double z = args.z;
  check_theta(theta);
  if (!std::isfinite(z)) detail::throw_domain("wright argument z", z, "must be finite");

  const quad_t th = theta;
  const double lz = z == 0.0 ? -INFINITY : std::log(std::fabs(z));
  quad_t sum = 0;
  double peak = -INFINITY;
  double previous = INFINITY;
  for (std::size_t k = 0; k < kMaxSeriesTerms; ++k) {
    const quad_t kq = static_cast<quad_t>(k);
    // 1 / Gamma(1 - theta (k+1)) = Gamma(theta (k+1)) sin(pi theta (k+1)) / pi
    const quad_t arg = th * (kq + 1);
    const quad_t log_mag = (k == 0 ? quad_t(0) : kq * static_cast<quad_t>(lz)) -
                           lgammaq(kq + 1) + lgammaq(arg);
    quad_t term = expq(log_mag) * detail::sin_pi_q(arg) / detail::pi_q();
    if (z < 0.0 && k % 2 == 1) term = -term;
    sum += term;

    const double lt = static_cast<double>(log_mag);
    peak = std::max(peak, lt);
    if (z == 0.0) break;
    if (lt < previous && lt < peak - 90.0) {
      const double value = static_cast<double>(sum);
      // Quad precision leaves ~33 digits; demand ~12 after cancellation.
      if (peak - std::log(std::fabs(value)) > 21.0 * std::numbers::ln10) {
        throw NonConvergent("wright series: cancellation at z = " + std::to_string(z) +
                            " leaves too few digits");
      }
      return value;
    }
    previous = lt;
  }
  if (z == 0.0) return static_cast<double>(sum);
  throw NonConvergent("wright series: no convergence within " +
                      std::to_string(kMaxSeriesTerms) + " terms at z = " + std::to_string(z));
}

double wright_function(WrightArgs args) {
  check_theta(args.theta);
  if (std::isnan(args.z) || args.z > 0.0) {
    detail::throw_domain("wright argument z", args.z, "must be <= 0");
  }
  if (args.z == -INFINITY) return 0.0;
  const double value_at_zero_log = -std::lgamma(1.0 - args.theta);
  if (args.z == 0.0 ||
      log_series_peak(args.theta, args.z) - value_at_zero_log < kLogSeriesCancellation) {
    try {
      return wright_series(args);
    } catch (const NonConvergent&) {
    }
  }
  return wright_integral(args.theta, -args.z);
}

double stable_subordinator_pdf(double x, double t, double theta) {
  check_theta(theta);
  if (!(t > 0.0) || !std::isfinite(t)) detail::throw_domain("time t", t, "must be finite and > 0");
  if (!(x > 0.0)) detail::throw_domain("subordinator argument x", x, "must be > 0");
  if (x == INFINITY) return 0.0;
  const double z = -t * std::pow(x, -theta);
  return theta * t * std::pow(x, -theta - 1.0) * wright_function({theta, z});
}

}  // namespace fresnel
