#include "fresnel/mixture_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "fresnel/errors.hpp"
#include "fresnel/polynomial.hpp"

namespace fresnel {

namespace {

constexpr double kPi = std::numbers::pi;

/// Roots closer than this (per unit t) are treated as one multiple root.
constexpr double kClusterRadius = 1e-4;
constexpr double kCriticalRatio = 1e-8;

void check_mixture(double alpha, double p, double t) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    detail::throw_domain("alpha", alpha, "must be finite and > 1");
  }
  if (!(p >= 0.0 && p <= 1.0)) detail::throw_domain("p", p, "must lie in [0, 1]");
  if (!(t > 0.0) || !std::isfinite(t)) detail::throw_domain("t", t, "must be finite and > 0");
}

struct Shape {
  double k;  // t a / pi
  double c;  // cos(pi / alpha)
  double d;  // (2p - 1) t b
  double t;
};

Shape shape(double alpha, double p, double t) {
  check_mixture(alpha, p, t);
  const double angle = kPi / (2.0 * alpha);
  return {t * std::cos(angle) / kPi, std::cos(2.0 * angle), (2.0 * p - 1.0) * t * std::sin(angle),
          t};
}

double quartic(const Shape& s, double x) {
  const double x2 = x * x;
  const double t2 = s.t * s.t;
  return x2 * x2 + 2.0 * s.c * t2 * x2 + t2 * t2;
}

double quartic_derivative(const Shape& s, double x) {
  return 4.0 * x * (x * x + s.c * s.t * s.t);
}

double quintic(const Shape& s, double x) {
  const double t2 = s.t * s.t;
  const double t4 = t2 * t2;
  const double d = s.d;
  // Horner form of -x^5 - 3d x^4 - 2t^2 x^3 - 2cd t^2 x^2 + (1 - 2c) t^4 x + d t^4.
  return ((((-x - 3.0 * d) * x - 2.0 * t2) * x - 2.0 * s.c * d * t2) * x + (1.0 - 2.0 * s.c) * t4) *
             x +
         d * t4;
}

double quintic_derivative(const Shape& s, double x) {
  const double t2 = s.t * s.t;
  const double t4 = t2 * t2;
  const double d = s.d;
  return (((-5.0 * x - 12.0 * d) * x - 6.0 * t2) * x - 4.0 * s.c * d * t2) * x +
         (1.0 - 2.0 * s.c) * t4;
}

struct Cluster {
  std::complex<double> centre;
  int size = 0;
};

std::vector<Cluster> cluster_roots(const std::vector<std::complex<double>>& roots) {
  std::vector<Cluster> clusters;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> members{i};
    used[i] = true;
    // Single linkage: grow until no unused root is near any member.
    for (std::size_t m = 0; m < members.size(); ++m) {
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (!used[j] && std::abs(roots[j] - roots[members[m]]) < 2.0 * kClusterRadius) {
          used[j] = true;
          members.push_back(j);
        }
      }
    }
    std::complex<double> sum = 0.0;
    for (const std::size_t j : members) sum += roots[j];
    clusters.push_back({sum / static_cast<double>(members.size()), static_cast<int>(members.size())});
  }
  return clusters;
}

/// Simple root of `c` near x0, bracketed by widening windows; falls back to
/// x0 when no sign change shows up.
double polish_near(const poly::Coefficients& c, double x0) {
  for (double w = 1e-7 * (1.0 + std::fabs(x0)); w <= 1e-2; w *= 10.0) {
    const double lo = x0 - w;
    const double hi = x0 + w;
    const double f_lo = poly::evaluate(c, lo);
    const double f_hi = poly::evaluate(c, hi);
    if (f_lo == 0.0 || f_hi == 0.0 || (f_lo > 0.0) != (f_hi > 0.0)) {
      return poly::polish_bracketed(c, lo, hi);
    }
  }
  return x0;
}

}  // namespace

double cauchy_mixture_pdf(double x, double alpha, double p, double t) {
  const Shape s = shape(alpha, p, t);
  return s.k * (x * x + 2.0 * s.d * x + t * t) / quartic(s, x);
}

double cauchy_mixture_cdf(double x, double alpha, double p, double t) {
  check_mixture(alpha, p, t);
  const double location = t * std::sin(kPi / (2.0 * alpha));
  const double scale = t * std::cos(kPi / (2.0 * alpha));
  auto cauchy_cdf = [&](double centre) { return 0.5 + std::atan((x - centre) / scale) / kPi; };
  return p * cauchy_cdf(location) + (1.0 - p) * cauchy_cdf(-location);
}

double pdf_derivative(double x, double alpha, double p, double t) {
  const Shape s = shape(alpha, p, t);
  const double q = quartic(s, x);
  return 2.0 * s.k * quintic(s, x) / (q * q);
}

double pdf_second_derivative(double x, double alpha, double p, double t) {
  const Shape s = shape(alpha, p, t);
  const double q = quartic(s, x);
  return 2.0 * s.k *
         (quintic_derivative(s, x) * q - 2.0 * quintic(s, x) * quartic_derivative(s, x)) /
         (q * q * q);
}

std::vector<double> stationary_quintic(double alpha, double p) {
  check_mixture(alpha, p, 1.0);
  const double c = std::cos(kPi / alpha);
  const double d = (2.0 * p - 1.0) * std::sin(kPi / (2.0 * alpha));
  return {d, 1.0 - 2.0 * c, -2.0 * c * d, -2.0, -3.0 * d, -1.0};
}

std::string_view to_string(ModalityKind kind) {
  switch (kind) {
    case ModalityKind::kUnimodal:
      return "unimodal";
    case ModalityKind::kBimodal:
      return "bimodal";
    case ModalityKind::kInflectionCase:
      return "inflection";
  }
  return "unknown";
}

std::string_view to_string(PointType type) {
  switch (type) {
    case PointType::kMax:
      return "max";
    case PointType::kMin:
      return "min";
    case PointType::kInflection:
      return "inflection";
  }
  return "unknown";
}

ModalityReport mode_analysis(double alpha, double t) {
  check_mixture(alpha, 0.5, t);
  ModalityReport report;
  report.alpha = alpha;
  report.p = 0.5;
  report.t = t;
  auto point = [&](double x, PointType type) {
    return StationaryPoint{x, type, pdf_second_derivative(x, alpha, 0.5, t), 1};
  };
  if (alpha < 3.0) {
    const double mode = t * std::sqrt(2.0 * std::sin(kPi / (2.0 * alpha)) - 1.0);
    report.kind = ModalityKind::kBimodal;
    report.stationary_points = {point(-mode, PointType::kMax), point(0.0, PointType::kMin),
                                point(mode, PointType::kMax)};
  } else {
    report.kind = ModalityKind::kUnimodal;
    report.stationary_points = {point(0.0, PointType::kMax)};
    if (alpha == 3.0) report.stationary_points[0].multiplicity = 3;
  }
  return report;
}

ModalityReport classify(double alpha, double p, double t) {
  check_mixture(alpha, p, t);
  // Work per unit t; locations scale linearly.
  const poly::Coefficients n = stationary_quintic(alpha, p);
  const Shape unit = shape(alpha, p, 1.0);

  std::vector<StationaryPoint> points;
  for (const Cluster& cluster : cluster_roots(poly::roots(n))) {
    if (std::fabs(cluster.centre.imag()) > kClusterRadius) continue;
    double x0 = cluster.centre.real();
    poly::Coefficients target = n;
    for (int k = 1; k < cluster.size; ++k) target = poly::derivative(target);
    x0 = polish_near(target, x0);

    // Residual relative to the size of the individual monomials at x0.
    double scale = 0.0;
    for (std::size_t k = 0; k < n.size(); ++k) {
      scale += std::fabs(n[k]) * std::pow(std::fabs(x0), static_cast<double>(k));
    }
    const double residual = std::fabs(poly::evaluate(n, x0));
    const double allowed = cluster.size == 1 ? 1e-12 : std::pow(10.0 * kClusterRadius, cluster.size);
    if (residual > allowed * std::max(scale, 1.0)) {
      throw RootFindingFailure("classify: residual " + std::to_string(residual) +
                               " at stationary point " + std::to_string(x0 * t));
    }

    const double delta = cluster.size == 1 ? 1e-6 * (1.0 + std::fabs(x0)) : 10.0 * kClusterRadius;
    const double left = quintic(unit, x0 - delta);
    const double right = quintic(unit, x0 + delta);
    PointType type = PointType::kInflection;
    if (left > 0.0 && right < 0.0) type = PointType::kMax;
    if (left < 0.0 && right > 0.0) type = PointType::kMin;
    const double x = x0 * t;
    points.push_back({x, type, pdf_second_derivative(x, alpha, p, t), cluster.size});
  }
  std::sort(points.begin(), points.end(),
            [](const StationaryPoint& a, const StationaryPoint& b) { return a.location < b.location; });

  ModalityReport report;
  report.alpha = alpha;
  report.p = p;
  report.t = t;
  report.stationary_points = points;

  double largest = 0.0;
  for (const StationaryPoint& sp : points) largest = std::max(largest, std::fabs(sp.second_derivative));
  for (const StationaryPoint& sp : points) {
    if (std::fabs(sp.second_derivative) <= kCriticalRatio * largest) report.near_critical = true;
  }

  const auto count = [&](PointType type) {
    return std::count_if(points.begin(), points.end(),
                         [type](const StationaryPoint& sp) { return sp.type == type; });
  };
  const auto maxima = count(PointType::kMax);
  const auto minima = count(PointType::kMin);
  const auto inflections = count(PointType::kInflection);
  if (maxima == 2 && minima == 1 && inflections == 0) {
    report.kind = ModalityKind::kBimodal;
  } else if (maxima == 1 && minima == 0 && inflections == 1) {
    report.kind = ModalityKind::kInflectionCase;
  } else if (maxima == 1 && minima == 0 && inflections == 0) {
    report.kind = ModalityKind::kUnimodal;
  } else {
    throw RootFindingFailure("classify: unexpected stationary pattern (" + std::to_string(maxima) +
                             " max, " + std::to_string(minima) + " min, " +
                             std::to_string(inflections) + " inflection)");
  }
  return report;
}

InflectionParameters inflection_parameters(double alpha, int sign) {
  if (!(alpha > 1.0 && alpha < 2.0)) detail::throw_domain("alpha", alpha, "must lie in (1, 2)");
  if (sign != 1 && sign != -1) throw DomainError("inflection sign must be +1 or -1");
  const double b = std::sin(kPi / (2.0 * alpha));
  const double root = std::sqrt(-std::cos(kPi / alpha));
  return {(b - sign * root) / (2.0 * b), sign * root};
}

double second_derivative_at_stationary(double alpha, double t) {
  if (!(alpha > 1.0 && alpha < 2.0)) detail::throw_domain("alpha", alpha, "must lie in (1, 2)");
  if (!(t > 0.0)) detail::throw_domain("t", t, "must be > 0");
  const double a = std::cos(kPi / (2.0 * alpha));
  const double b = std::sin(kPi / (2.0 * alpha));
  const double b2 = b * b;
  return (3.0 * a * a - 1.0) / (2.0 * kPi * t * t * t * a * b2 * b2);
}

double critical_alpha() { return kPi / (2.0 * std::acos(1.0 / std::sqrt(3.0))); }

}  // namespace fresnel
