// Acceptance checks 1-11. One PASS/FAIL line per criterion; exit status is
// the number of failed criteria.

#include <boost/math/special_functions/airy.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "fresnel/errors.hpp"
#include "fresnel/fresnel_density.hpp"
#include "fresnel/mixture_analysis.hpp"
#include "fresnel/signed_measure.hpp"
#include "fresnel/special_fn.hpp"
#include "fresnel/stable_sampling.hpp"
#include "fresnel/subordination.hpp"
#include "oracles.hpp"

using namespace fresnel;
using oracle::kPi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// 1
Outcome airy_cross_validation() {
  constexpr double kTol = 1e-7;
  constexpr double kBudget = 30.0;
  const Timer timer;
  double worst = 0.0;
  double worst_classical = 0.0;
  for (const double alpha : {1.5, 2.0, 2.5, 3.0, 4.0}) {
    const AiryOrder order(alpha);
    for (const double x : oracle::linspace(-4.0, 4.0, 41)) {
      const double s = airy_series(x, order);
      const double q = airy_quadrature(x, order);
      worst = std::max(worst, std::fabs(s - q));
      if (alpha == 3.0) {
        const double classical = boost::math::airy_ai(x);
        worst_classical = std::max({worst_classical, std::fabs(s - classical), std::fabs(q - classical)});
      }
    }
  }
  const double elapsed = timer.seconds();
  return {worst <= kTol && worst_classical <= kTol && elapsed < kBudget,
          fmt("max |series - quadrature| = %.2e, max vs classical Ai = %.2e (tol %.0e); %.2f s (budget %.0f s)",
              worst, worst_classical, kTol, elapsed, kBudget)};
}

// 2
Outcome closed_form_rod() {
  constexpr double kTol = 1e-10;
  double worst = 0.0;
  for (const double t : {0.5, 1.0, 2.0}) {
    for (const double x : oracle::linspace(-6.0, 6.0, 200)) {
      const double expected = std::cos(x * x / (4.0 * t) - 0.25 * kPi) / (2.0 * std::sqrt(kPi * t));
      worst = std::max(worst, std::fabs(density(x, {2.0, 0.5, t}) - expected));
    }
  }
  return {worst <= kTol, fmt("max deviation %.2e over 600 points (tol %.0e)", worst, kTol)};
}

// 3
Outcome weibull_identity() {
  constexpr double kTol = 1e-8;
  double worst = 0.0;
  for (const double t : {0.5, 1.0, 2.0}) {
    for (const double x : {0.5, 1.0, 2.0, 4.0}) {
      const double closed = std::cos(x * x / (4.0 * t) - 0.25 * kPi) / (2.0 * std::sqrt(kPi * t));
      worst = std::max(worst, std::fabs(weibull_representation(x, {2.0, 0.5, t}) - closed));
    }
  }
  return {worst <= kTol, fmt("max |E[...] - closed form| = %.2e (tol %.0e)", worst, kTol)};
}

// 4
Outcome normalization() {
  constexpr double kTol = 1e-6;
  const PseudoParams sets[] = {{1.5, 0.5, 1.0}, {1.5, 0.2, 0.5}, {1.5, 0.9, 2.0},
                               {2.0, 0.5, 2.0}, {2.0, 0.2, 1.0}, {2.0, 0.9, 0.5},
                               {3.0, 0.5, 0.5}, {3.0, 0.2, 2.0}, {3.0, 0.9, 1.0}};
  double worst = 0.0;
  bool cf_exact = true;
  for (const PseudoParams& params : sets) {
    // Body by composite Gauss-Legendre; tails from the sine-integral route of
    // the distribution function, which starts beyond the series range.
    const double c = std::pow(params.alpha * params.t, 1.0 / params.alpha);
    const double span = 1.25 * airy_series_range(AiryOrder(params.alpha)) * c;
    const double body = oracle::integrate([&](double x) { return density(x, params); }, -span, span,
                                          static_cast<int>(40 * span));
    const double mass = signed_cdf(-span, params) + body + (1.0 - signed_cdf(span, params));
    worst = std::max(worst, std::fabs(mass - 1.0));
    cf_exact = cf_exact && char_fn(0.0, params) == std::complex<double>(1.0, 0.0);
  }
  return {worst <= kTol && cf_exact,
          fmt("max |mass - 1| = %.2e (tol %.0e) over 9 sets; char_fn(0) == 1 exactly: %s", worst, kTol,
              cf_exact ? "yes" : "no")};
}

// 5
Outcome subordination_equivalence() {
  constexpr double kTol = 1e-6;
  double worst = 0.0;
  std::string where;
  for (const auto& [alpha, theta] : {std::pair{2.0, 0.75}, std::pair{3.0, 0.5}, std::pair{2.5, 0.6}}) {
    const SubordinationSpec spec{alpha, theta, 0.5};
    for (const double x : oracle::linspace(-5.0, 5.0, 21)) {
      const double e = std::fabs(subordinated_density_series(x, 1.0, spec) -
                                 subordinated_density_quadrature(x, 1.0, spec));
      if (e > worst) {
        worst = e;
        where = fmt("(%.2g, %.2g) x = %.2f", alpha, theta, x);
      }
    }
  }
  return {worst <= kTol, fmt("max |series - quadrature| = %.2e at %s (tol %.0e)", worst, where.c_str(), kTol)};
}

// 6
Outcome distributional_identity() {
  constexpr std::size_t kN = 1'000'000;
  constexpr double kBudget = 120.0;
  const double band = 4.0 / std::sqrt(static_cast<double>(kN));
  const std::vector<double> probes = oracle::linspace(-3.0, 3.0, 21);
  const Timer timer;
  bool pass = true;
  std::string detail;
  std::uint64_t stream = 0;
  for (const auto& [alpha, theta, p] :
       {std::tuple{3.0, 0.5, 0.3}, std::tuple{2.5, 0.6, 0.5}, std::tuple{4.0, 0.4, 0.8}}) {
    const SubordinationSpec spec{alpha, theta, p};
    detail += fmt("(%.2g, %.2g, %.2g): ", alpha, theta, p);
    try {
      const auto y = sample_subordinated(spec, 1.0, kN, {20240601, stream++});
      double worst = 0.0;
      for (const double g : probes) {
        if (g == 0.0) continue;  // 20 nonzero frequencies
        worst = std::max(worst, std::abs(empirical_char_fn(y, g) - subordinated_char_fn(g, 1.0, spec)));
      }
      pass = pass && worst <= band;
      detail += fmt("max |ecf - cf| = %.2e; ", worst);
    } catch (const InvalidRegime& e) {
      pass = false;
      detail += std::string("no sign-mixture law (") + e.what() + "); ";
    }
  }
  const double elapsed = timer.seconds();
  pass = pass && elapsed < kBudget;
  return {pass, detail + fmt("band %.1e, n = %zu, %.1f s (budget %.0f s)", band, kN, elapsed, kBudget)};
}

// 7
Outcome cauchy_closed_form() {
  constexpr double kTol = 1e-6;
  double worst = 0.0;
  for (const auto& [alpha, theta, p] : {std::tuple{2.0, 0.5, 0.5}, std::tuple{2.0, 0.5, 0.2},
                                        std::tuple{1.25, 0.8, 0.7}, std::tuple{4.0, 0.25, 0.4}}) {
    for (const double x : {-3.0, -1.0, 0.0, 0.6, 2.0}) {
      worst = std::max(worst, std::fabs(subordinated_density_quadrature(x, 1.0, {alpha, theta, p}) -
                                        cauchy_mixture_pdf(x, alpha, p, 1.0)));
    }
  }
  // alpha = 2, p = 1/2: (t / pi sqrt 2) (x^2 + t^2) / (x^4 + t^4).
  double worst_symmetric = 0.0;
  for (const double t : {0.5, 1.0, 2.0}) {
    for (const double x : oracle::linspace(-4.0, 4.0, 33)) {
      const double closed = t / (kPi * std::sqrt(2.0)) * (x * x + t * t) / (x * x * x * x + t * t * t * t);
      worst_symmetric = std::max(worst_symmetric, std::fabs(cauchy_mixture_pdf(x, 2.0, 0.5, t) - closed));
    }
  }
  const double at_zero = cauchy_mixture_pdf(0.0, 2.0, 0.5, 1.0);
  const double zero_err = std::fabs(at_zero - 1.0 / (kPi * std::sqrt(2.0)));
  return {worst <= kTol && worst_symmetric <= 1e-14 && zero_err <= 1e-15,
          fmt("quadrature vs closed form %.2e (tol %.0e); symmetric formula %.1e; f(0) = %.15f", worst, kTol,
              worst_symmetric, at_zero)};
}

// 8
Outcome modality() {
  constexpr double kTol = 1e-9;
  const double mode = std::sqrt(std::sqrt(2.0) - 1.0);
  const ModalityReport two = classify(2.0, 0.5, 1.0);
  bool pass = two.kind == ModalityKind::kBimodal && two.stationary_points.size() == 3;
  double err = INFINITY;
  if (pass) {
    err = std::max(std::fabs(two.stationary_points[0].location + mode),
                   std::fabs(two.stationary_points[2].location - mode));
    pass = err <= kTol && two.stationary_points[0].type == PointType::kMax &&
           two.stationary_points[2].type == PointType::kMax;
  }
  std::string detail = fmt("alpha 2: %s, mode error %.1e (tol %.0e)", std::string(to_string(two.kind)).c_str(),
                           err, kTol);
  for (const double alpha : {3.0, 4.0}) {
    const ModalityReport r = classify(alpha, 0.5, 1.0);
    const bool ok = r.kind == ModalityKind::kUnimodal && r.stationary_points.size() == 1 &&
                    std::fabs(r.stationary_points[0].location) <= kTol;
    pass = pass && ok;
    detail += fmt("; alpha %.0f: %s at %.1e", alpha, std::string(to_string(r.kind)).c_str(),
                  r.stationary_points.empty() ? NAN : r.stationary_points[0].location);
  }
  return {pass, detail};
}

// 9
Outcome inflection() {
  const double alpha = critical_alpha();
  const double p = (std::sqrt(2.0) - 1.0) / (2.0 * std::sqrt(2.0));
  const double t = 1.0;
  const ModalityReport r = classify(alpha, p, t);
  const double x = t / std::sqrt(3.0);
  const double f1 = std::fabs(pdf_derivative(x, alpha, p, t));
  const double f2 = std::fabs(pdf_second_derivative(x, alpha, p, t));
  const double f2_fd = std::fabs(oracle::second_derivative(
      [&](double y) { return cauchy_mixture_pdf(y, alpha, p, t); }, x, 1e-3));
  bool located = false;
  for (const StationaryPoint& sp : r.stationary_points) located = located || std::fabs(sp.location - x) < 1e-6;
  const bool pass = r.stationary_points.size() == 2 && located && f1 <= 1e-10 && f2 <= 1e-8 && f2_fd <= 1e-8;
  return {pass, fmt("alpha* = %.10f, p = %.7f: %zu stationary points (%s); at t/sqrt3 |f'| = %.1e, "
                    "|f''| = %.1e, finite difference %.1e",
                    alpha, p, r.stationary_points.size(), std::string(to_string(r.kind)).c_str(), f1, f2, f2_fd)};
}

// 10
Outcome signed_measure_sanity() {
  const KernelParams k{2.0, 0.5};
  double full = 0.0;
  for (const double t : {0.5, 1.0, 3.0}) {
    full = std::max(full, std::fabs(cylinder_measure({{t}, {{-INFINITY, INFINITY}}}, k) - 1.0));
  }
  double negative = 0.0;
  Box negative_box{0, 0};
  for (double lo = 0.0; lo < 6.0 && negative >= 0.0; lo += 0.5) {
    for (double width = 0.5; width <= 2.0 && negative >= 0.0; width += 0.5) {
      const double m = cylinder_measure({{1.0}, {{lo, lo + width}}}, k);
      if (m < negative) {
        negative = m;
        negative_box = {lo, lo + width};
      }
    }
  }
  const double a = -2.0;
  const double b = 0.7;
  const double c = 3.1;
  const double additivity = std::fabs(cylinder_measure({{1.0}, {{a, c}}}, k) - cylinder_measure({{1.0}, {{a, b}}}, k) -
                                      cylinder_measure({{1.0}, {{b, c}}}, k));
  return {full <= 1e-6 && negative < 0.0 && additivity <= 1e-8,
          fmt("|full line - 1| = %.1e; measure [%.1f, %.1f] = %.4f; additivity %.1e", full, negative_box.lo,
              negative_box.hi, negative, additivity)};
}

// 11
Outcome derivative_correctness() {
  constexpr double kTol = 1e-6;
  const double sets[][3] = {{2.0, 0.5, 1.0}, {1.5, 0.2, 0.7}, {3.0, 0.9, 2.0}, {critical_alpha(), 0.1464466, 1.0},
                            {5.0, 0.35, 0.4}};
  std::mt19937_64 gen(20240611);
  std::uniform_real_distribution<double> unit(-4.0, 4.0);
  double worst = 0.0;
  for (const auto& s : sets) {
    auto f = [&](double x) { return cauchy_mixture_pdf(x, s[0], s[1], s[2]); };
    for (int i = 0; i < 100; ++i) {
      const double x = unit(gen) * s[2];
      const double exact = pdf_derivative(x, s[0], s[1], s[2]);
      const double fd = oracle::derivative(f, x, 1e-3 * s[2]);
      // Relative, guarded where f' crosses zero.
      const double scale = std::max(std::fabs(exact), 1e-6 * f(x) / s[2]);
      worst = std::max(worst, std::fabs(exact - fd) / scale);
    }
  }
  return {worst <= kTol, fmt("max relative deviation %.2e over 500 points (tol %.0e)", worst, kTol)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Airy cross-validation", airy_cross_validation},
      {"closed form alpha = 2", closed_form_rod},
      {"Weibull identity", weibull_identity},
      {"normalization", normalization},
      {"subordination series vs quadrature", subordination_equivalence},
      {"mixture sampling vs transform", distributional_identity},
      {"Cauchy mixture closed form", cauchy_closed_form},
      {"modality", modality},
      {"inflection case", inflection},
      {"signed measure sanity", signed_measure_sanity},
      {"derivative correctness", derivative_correctness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failed += !outcome.pass;
    std::printf("%s [%zu] %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
