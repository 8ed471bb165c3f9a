#include "fresnel_cli/suites.hpp"

#include <boost/math/special_functions/airy.hpp>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "fresnel/fresnel_density.hpp"
#include "fresnel/mixture_analysis.hpp"
#include "fresnel/quadrature.hpp"
#include "fresnel/special_fn.hpp"
#include "fresnel/stable_sampling.hpp"
#include "fresnel/subordination.hpp"

namespace fresnel::cli {
namespace {

using std::numbers::pi;

constexpr std::array<std::string_view, 6> kSuites{"airy", "density", "weibull", "subordination", "cf-mc",
                                                  "mixture"};

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

Check make(std::string name, double error, double tolerance) {
  return {std::move(name), error, tolerance, error <= tolerance};
}

double rod_closed_form(double x, double t) {
  return std::cos(x * x / (4.0 * t) - 0.25 * pi) / (2.0 * std::sqrt(pi * t));
}

std::vector<Check> airy_suite() {
  std::vector<Check> checks;
  double classical = 0.0;
  for (const double alpha : {1.5, 2.0, 2.5, 3.0, 4.0}) {
    const AiryOrder order(alpha);
    double worst = 0.0;
    for (const double x : linspace(-4.0, 4.0, 41)) {
      const double s = airy_series(x, order);
      const double q = airy_quadrature(x, order);
      worst = std::max(worst, std::fabs(s - q));
      if (alpha == 3.0) {
        const double ai = boost::math::airy_ai(x);
        classical = std::max({classical, std::fabs(s - ai), std::fabs(q - ai)});
      }
    }
    char name[64];
    std::snprintf(name, sizeof name, "series vs quadrature, alpha = %g", alpha);
    checks.push_back(make(name, worst, 1e-7));
  }
  checks.push_back(make("alpha = 3 vs classical Airy", classical, 1e-7));
  return checks;
}

std::vector<Check> density_suite() {
  std::vector<Check> checks;
  double worst = 0.0;
  for (const double t : {0.5, 1.0, 2.0}) {
    for (const double x : linspace(-6.0, 6.0, 200)) {
      worst = std::max(worst, std::fabs(density(x, {2.0, 0.5, t}) - rod_closed_form(x, t)));
    }
  }
  checks.push_back(make("alpha = 2 closed form", worst, 1e-10));

  double mass_error = 0.0;
  double cf_error = 0.0;
  double pde = 0.0;
  for (const double alpha : {1.5, 2.0, 3.0}) {
    for (const double p : {0.2, 0.5, 0.9}) {
      const PseudoParams params{alpha, p, 1.0};
      const double c = std::pow(alpha, 1.0 / alpha);
      const double span = 1.25 * airy_series_range(AiryOrder(alpha)) * c;
      double body = 0.0;
      for (double a = -span; a < span; a += 0.5) {
        body += quad::integrate([&](double x) { return density(x, params); }, a, std::min(a + 0.5, span),
                                {1e-12, 1e-12});
      }
      const double mass = signed_cdf(-span, params) + body + (1.0 - signed_cdf(span, params));
      mass_error = std::max(mass_error, std::fabs(mass - 1.0));
      cf_error = std::max(cf_error, std::abs(char_fn(0.0, params) - 1.0));
      pde = std::max(pde, pde_fourier_residual(linspace(-1.5, 1.5, 21), params));
    }
  }
  checks.push_back(make("unit mass", mass_error, 1e-6));
  checks.push_back(make("transform at 0", cf_error, 0.0));
  // Central differences of step h = 1e-3 leave h^2 g^{4 alpha} / 12 of
  // truncation: 1.1e-5 at alpha = 3, |g| = 1.5.
  checks.push_back(make("rod equation in Fourier space", pde, 2e-5));
  return checks;
}

std::vector<Check> weibull_suite() {
  double worst = 0.0;
  for (const double t : {0.5, 1.0, 2.0}) {
    for (const double x : {0.5, 1.0, 2.0, 4.0}) {
      worst = std::max(worst, std::fabs(weibull_representation(x, {2.0, 0.5, t}) - rod_closed_form(x, t)));
    }
  }
  double general = 0.0;
  for (const auto& [alpha, p] : {std::pair{1.5, 0.3}, std::pair{3.0, 0.5}, std::pair{4.0, 0.8}}) {
    for (const double x : {-2.0, 0.7, 1.5}) {
      const PseudoParams params{alpha, p, 1.0};
      general = std::max(general, std::fabs(weibull_representation(x, params) - density(x, params)));
    }
  }
  return {make("Weibull expectation vs alpha = 2 closed form", worst, 1e-8),
          make("Weibull expectation vs density", general, 1e-8)};
}

std::vector<Check> subordination_suite() {
  std::vector<Check> checks;
  for (const auto& [alpha, theta] : {std::pair{2.0, 0.75}, std::pair{3.0, 0.5}, std::pair{2.5, 0.6}}) {
    const SubordinationSpec spec{alpha, theta, 0.5};
    double worst = 0.0;
    for (const double x : linspace(-5.0, 5.0, 21)) {
      worst = std::max(worst, std::fabs(subordinated_density_series(x, 1.0, spec) -
                                        subordinated_density_quadrature(x, 1.0, spec)));
    }
    char name[80];
    std::snprintf(name, sizeof name, "series vs quadrature, (alpha, theta) = (%g, %g)", alpha, theta);
    checks.push_back(make(name, worst, 1e-6));
  }
  double cauchy = 0.0;
  for (const double x : {-3.0, -1.0, 0.0, 0.6, 2.0}) {
    cauchy = std::max(cauchy, std::fabs(subordinated_density_quadrature(x, 1.0, {2.0, 0.5, 0.2}) -
                                        cauchy_mixture_pdf(x, 2.0, 0.2, 1.0)));
  }
  checks.push_back(make("alpha theta = 1 vs Cauchy mixture", cauchy, 1e-6));
  return checks;
}

std::vector<Check> cf_mc_suite(const SuiteOptions& options) {
  if (options.n < 1) throw std::invalid_argument("cf-mc needs n >= 1");
  const double band = 4.0 / std::sqrt(static_cast<double>(options.n));
  std::vector<Check> checks;
  std::uint64_t stream = 0;
  // Only parameter sets whose time-changed law is a sign mixture of stable laws.
  for (const auto& [alpha, theta, p] :
       {std::tuple{3.0, 0.5, 0.3}, std::tuple{4.0, 0.4, 0.8}, std::tuple{1.8, 0.4, 0.7}, std::tuple{2.0, 0.5, 0.5}}) {
    const SubordinationSpec spec{alpha, theta, p};
    const auto y = sample_subordinated(spec, 1.0, options.n, {options.seed, stream++});
    double worst = 0.0;
    for (const double g : linspace(-3.0, 3.0, 21)) {
      if (g != 0.0) worst = std::max(worst, std::abs(empirical_char_fn(y, g) - subordinated_char_fn(g, 1.0, spec)));
    }
    char name[80];
    std::snprintf(name, sizeof name, "empirical vs analytic transform, (%g, %g, %g)", alpha, theta, p);
    checks.push_back(make(name, worst, band));
  }
  return checks;
}

std::vector<Check> mixture_suite() {
  std::vector<Check> checks;
  const ModalityReport two = classify(2.0, 0.5, 1.0);
  const double mode = std::sqrt(std::sqrt(2.0) - 1.0);
  double mode_error = INFINITY;
  if (two.kind == ModalityKind::kBimodal && two.stationary_points.size() == 3) {
    mode_error = std::max(std::fabs(two.stationary_points[0].location + mode),
                          std::fabs(two.stationary_points[2].location - mode));
  }
  checks.push_back(make("alpha = 2 modes at +-sqrt(sqrt 2 - 1)", mode_error, 1e-9));
  for (const double alpha : {3.0, 4.0}) {
    const ModalityReport r = classify(alpha, 0.5, 1.0);
    const bool unimodal = r.kind == ModalityKind::kUnimodal && r.stationary_points.size() == 1;
    char name[64];
    std::snprintf(name, sizeof name, "alpha = %g unimodal at 0", alpha);
    checks.push_back(make(name, unimodal ? std::fabs(r.stationary_points[0].location) : INFINITY, 1e-12));
  }

  const double alpha = critical_alpha();
  checks.push_back(make("critical order", std::fabs(alpha - pi / (2.0 * std::acos(1.0 / std::sqrt(3.0)))), 1e-14));
  const double p = (std::sqrt(2.0) - 1.0) / (2.0 * std::sqrt(2.0));
  const ModalityReport r = classify(alpha, p, 1.0);
  const double x = 1.0 / std::sqrt(3.0);
  const bool shape = r.kind == ModalityKind::kInflectionCase && r.stationary_points.size() == 2;
  checks.push_back(make("inflection case: two stationary points", shape ? 0.0 : 1.0, 0.0));
  checks.push_back(make("inflection case: |f'| at 1/sqrt 3", std::fabs(pdf_derivative(x, alpha, p, 1.0)), 1e-10));
  checks.push_back(make("inflection case: |f''| at 1/sqrt 3", std::fabs(pdf_second_derivative(x, alpha, p, 1.0)), 1e-8));
  return checks;
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

std::vector<Check> run_suite(std::string_view suite, const SuiteOptions& options) {
  if (suite == "airy") return airy_suite();
  if (suite == "density") return density_suite();
  if (suite == "weibull") return weibull_suite();
  if (suite == "subordination") return subordination_suite();
  if (suite == "cf-mc") return cf_mc_suite(options);
  if (suite == "mixture") return mixture_suite();
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace fresnel::cli
