#pragma once

// Two-component Cauchy mixture
//
//   f(x) = (t a / pi) (x^2 + t^2 + 2 (2p - 1) x t b) / (x^4 + t^4 + 2 x^2 t^2 cos(pi / alpha)),
//   a = cos(pi / 2 alpha), b = sin(pi / 2 alpha),
//
// i.e. weight p on Cauchy(+t b, t a) and 1 - p on Cauchy(-t b, t a), and the
// location and type of its stationary points. f' = 2 K N(x) / Q(x)^2 with
// K = t a / pi, Q the quartic denominator and N the quintic
//   N(x) = -x^5 - 3 d x^4 - 2 t^2 x^3 - 2 c d t^2 x^2 + (1 - 2c) t^4 x + d t^4,
//   c = cos(pi / alpha), d = (2p - 1) t b.

#include <string_view>
#include <vector>

namespace fresnel {

double cauchy_mixture_pdf(double x, double alpha, double p, double t);
double cauchy_mixture_cdf(double x, double alpha, double p, double t);
double pdf_derivative(double x, double alpha, double p, double t);
double pdf_second_derivative(double x, double alpha, double p, double t);

/// Coefficients of N in increasing degree, in units where t = 1.
std::vector<double> stationary_quintic(double alpha, double p);

enum class ModalityKind { kUnimodal, kBimodal, kInflectionCase };
enum class PointType { kMax, kMin, kInflection };

std::string_view to_string(ModalityKind kind);
std::string_view to_string(PointType type);

struct StationaryPoint {
  double location = 0.0;
  PointType type = PointType::kMax;
  double second_derivative = 0.0;
  int multiplicity = 1;  ///< as a root of f'
};

struct ModalityReport {
  ModalityKind kind = ModalityKind::kUnimodal;
  std::vector<StationaryPoint> stationary_points;  ///< sorted by location
  double alpha = 0.0;
  double p = 0.0;
  double t = 0.0;
  /// Some stationary point has |f''| <= 1e-8 max |f''|: the parameters sit
  /// (numerically) on the inflection curve.
  bool near_critical = false;
};

/// Symmetric case p = 1/2 from the closed forms: maxima at
/// +-t sqrt(2 sin(pi / 2 alpha) - 1) and a minimum at 0 for alpha < 3,
/// a single maximum at 0 otherwise.
ModalityReport mode_analysis(double alpha, double t);

/// Real roots of N from companion-matrix eigenvalues, clustered, polished and
/// classified by the sign change of f'. Throws RootFindingFailure when a
/// polished root fails its residual check or the pattern is not one of the
/// three kinds.
ModalityReport classify(double alpha, double p, double t);

struct InflectionParameters {
  double p;       ///< (b -+ sqrt(-cos(pi/alpha))) / (2b)
  double x_star;  ///< sign * sqrt(-cos(pi/alpha)), per unit t
};

/// Weight and location for which f' has a root at x_star t; requires
/// 1 < alpha < 2 and sign = +-1.
InflectionParameters inflection_parameters(double alpha, int sign);

/// f'' at x_star from the closed form
///   (3 a^2 - 1) / (2 pi t^3 a b^4),  1 < alpha < 2.
double second_derivative_at_stationary(double alpha, double t);

/// pi / (2 arccos(1 / sqrt 3)): the order at which the stationary point of
/// inflection_parameters has vanishing second derivative.
double critical_alpha();

}  // namespace fresnel
