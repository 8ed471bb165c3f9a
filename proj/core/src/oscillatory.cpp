#include "oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "fresnel/errors.hpp"
#include "fresnel/quadrature.hpp"

namespace fresnel::detail {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr long kMaxPanels = 4'000'000;
constexpr std::size_t kMaxTailPanels = 512;

struct PowerPhase {
  double x;
  double alpha;

  double operator()(double s) const { return s * x + std::pow(s, alpha) / alpha; }
  double derivative(double s) const { return x + std::pow(s, alpha - 1.0); }
};

/// Solves phase(s) = level for s in [lo, hi], where phase is monotone on the
/// bracket. Newton steps that leave the bracket fall back to bisection.
double solve_level(const PowerPhase& phase, double level, double lo, double hi) {
  const bool increasing = phase(hi) > phase(lo);
  double s = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = phase(s) - level;
    if ((f < 0.0) == increasing) {
      lo = s;
    } else {
      hi = s;
    }
    const double d = phase.derivative(s);
    double next = d != 0.0 ? s - f / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - s) <= 1e-15 * std::max(1.0, std::fabs(s))) return next;
    s = next;
  }
  return s;
}

/// Solves phase(s) = level on the increasing branch starting at `from`.
double solve_level_above(const PowerPhase& phase, double level, double from) {
  const double slope = phase.derivative(from);
  double step = slope > 0.0 ? std::clamp(kPi / slope, 1e-9 * (1.0 + from), 1.0 + from)
                            : 1.0 + from;
  double hi = from + step;
  while (phase(hi) < level) {
    step *= 2.0;
    hi = from + step;
  }
  return solve_level(phase, level, from, hi);
}

}  // namespace

double power_phase_integral(double x, double alpha, PowerPhaseKind kind, double tol) {
  const PowerPhase phase{x, alpha};
  const double offset = kind == PowerPhaseKind::kCos ? 0.5 * kPi : 0.0;

  auto integrand = [&](double s) {
    const double ph = phase(s);
    return kind == PowerPhaseKind::kCos ? std::cos(ph) : std::sin(ph) / s;
  };

  const double s0 = x < 0.0 ? std::pow(-x, 1.0 / (alpha - 1.0)) : 0.0;
  const double phi0 = x < 0.0 ? phase(s0) : 0.0;

  // Zero levels offset + k pi strictly above the phase minimum.
  const long k_first = static_cast<long>(std::floor((phi0 - offset) / kPi)) + 1;

  std::vector<double> bounds{0.0};
  if (x < 0.0) {
    const long k_top = static_cast<long>(std::ceil(-offset / kPi)) - 1;
    if (k_top - k_first > kMaxPanels) {
      throw NonConvergent("airy quadrature: argument " + std::to_string(x) +
                          " needs too many oscillation panels");
    }
    for (long k = k_top; k >= k_first; --k) {
      bounds.push_back(solve_level(phase, offset + k * kPi, 0.0, s0));
    }
  }

  // Increasing branch up to the start of the extrapolated tail.
  const double s_tail = std::max(2.0 * s0, 1.0);
  long k = k_first;
  double last = std::max(s0, bounds.back());
  while (true) {
    const double b = solve_level_above(phase, offset + k * kPi, last);
    bounds.push_back(b);
    last = b;
    ++k;
    if (b >= s_tail) break;
    if (static_cast<long>(bounds.size()) > kMaxPanels) {
      throw NonConvergent("airy quadrature: too many panels before the tail");
    }
  }

  double head = 0.0;
  // Rounding accumulated over the head panels; no tail estimate can beat it.
  double noise = 0.0;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double a = bounds[i];
    const double b = bounds[i + 1];
    // cos(phase) cannot be better than the rounding of the phase itself,
    // which grows like |phase| eps once |x| is large.
    const double phase_floor =
        64.0 * std::numeric_limits<double>::epsilon() *
        std::max({1.0, std::fabs(phase(a)), std::fabs(phase(b))}) * (b - a);
    const quad::Tolerance panel_tol{std::max(0.01 * tol, phase_floor), 1e-14};
    const double panel = quad::integrate(integrand, a, b, panel_tol, "airy quadrature panel");
    head += panel;
    noise += phase_floor + 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(panel);
  }
  const double target_error = std::max(tol, noise);

  std::vector<double> partial{head};
  std::size_t target = 24;
  quad::Extrapolation estimate{};
  while (true) {
    while (partial.size() <= target) {
      const double b = solve_level_above(phase, offset + k * kPi, last);
      partial.push_back(partial.back() + quad::gauss_legendre(integrand, last, b));
      last = b;
      ++k;
    }
    estimate = quad::wynn_epsilon(partial);
    if (estimate.error <= 0.1 * target_error) break;
    if (target >= kMaxTailPanels) {
      if (estimate.error <= target_error) break;
      char message[128];
      std::snprintf(message, sizeof message,
                    "airy quadrature: tail extrapolation did not settle (error %.3e, target %.3e)",
                    estimate.error, target_error);
      throw NonConvergent(message);
    }
    target *= 2;
  }
  return estimate.value;
}

}  // namespace fresnel::detail
