#include "fresnel/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/special_functions/sin_pi.hpp>

#include "extended.hpp"
#include "fresnel/errors.hpp"
#include "oscillatory.hpp"

namespace fresnel {

using detail::quad_t;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogTableFloor = -92.1;  // ln 1e-40

}  // namespace

AiryOrder::AiryOrder(double alpha) : alpha_(alpha) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    detail::throw_domain("airy order alpha", alpha, "must be finite and > 1");
  }
}

struct GeneralizedAiry::Table {
  double alpha = 2.0;
  double range = 0.0;
  std::vector<double> log_mag;  // ln |c_k| without the sine factor
  std::vector<quad_t> coef;     // c_k
};

namespace {

std::vector<double> log_magnitudes(double alpha, std::size_t count) {
  const double la = std::log(alpha);
  const double base = -std::log(kPi) - (alpha - 1.0) / alpha * la;
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double kd = static_cast<double>(k);
    out[k] = kd / alpha * la + std::lgamma((kd + 1.0) / alpha) - std::lgamma(kd + 1.0) + base;
  }
  return out;
}

double peak_log_term(const std::vector<double>& log_mag, double log_r) {
  double peak = -INFINITY;
  for (std::size_t k = 0; k < log_mag.size(); ++k) {
    peak = std::max(peak, log_mag[k] + static_cast<double>(k) * log_r);
  }
  return peak;
}

/// Largest R with peak term <= kSeriesPeakLimit whose series is also
/// exhausted inside the table.
double find_range(const std::vector<double>& log_mag) {
  const double last_k = static_cast<double>(log_mag.size() - 1);
  auto admissible = [&](double log_r) {
    return peak_log_term(log_mag, log_r) <= detail::kLogSeriesPeakLimit &&
           log_mag.back() + last_k * log_r <= kLogTableFloor;
  };
  double lo = std::log(1e-3);
  double hi = std::log(1e4);
  if (!admissible(lo)) return 0.0;
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (admissible(mid) ? lo : hi) = mid;
  }
  return std::exp(lo);
}

std::shared_ptr<const GeneralizedAiry::Table> build_table(double alpha) {
  auto table = std::make_shared<GeneralizedAiry::Table>();
  table->alpha = alpha;
  std::vector<double> log_mag = log_magnitudes(alpha, kMaxSeriesTerms);
  table->range = find_range(log_mag);

  // Keep coefficients until the terms at the range edge are negligible.
  const double log_r = std::log(std::max(table->range, 1e-300));
  std::size_t count = log_mag.size();
  double previous = INFINITY;
  for (std::size_t k = 0; k < log_mag.size(); ++k) {
    const double lt = log_mag[k] + static_cast<double>(k) * log_r;
    if (lt < kLogTableFloor && lt < previous) {
      count = k + 8;
      break;
    }
    previous = lt;
  }
  count = std::min(count, log_mag.size());
  log_mag.resize(count);

  const quad_t a = alpha;
  const quad_t la = logq(a);
  const quad_t base = -logq(detail::pi_q()) - (a - 1) / a * la;
  table->coef.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    const quad_t kq = static_cast<quad_t>(k);
    const quad_t mag = expq(kq / a * la + lgammaq((kq + 1) / a) - lgammaq(kq + 1) + base);
    table->coef[k] = mag * detail::sin_pi_q((kq + 1) * (a + 1) / (2 * a));
  }
  table->log_mag = std::move(log_mag);
  return table;
}

/// Weighted power sum; `shift` = 1 integrates term by term from 0.
double sum_series(const GeneralizedAiry::Table& table, double x, double even_weight,
                  double odd_weight, int shift, double tol) {
  if (!(std::fabs(x) <= table.range)) {
    throw OutOfSeriesRange("airy series: |x| = " + std::to_string(std::fabs(x)) +
                           " exceeds working range " + std::to_string(table.range) +
                           " for alpha = " + std::to_string(table.alpha));
  }
  if (x == 0.0) return shift == 0 ? static_cast<double>(table.coef[0]) * even_weight : 0.0;

  const double log_x = std::log(std::fabs(x));
  const double log_stop = std::log(tol) - 6.0 * std::numbers::ln10;
  const quad_t xq = x;
  quad_t power = shift == 0 ? quad_t(1) : xq;
  quad_t sum = 0;
  double previous = INFINITY;
  for (std::size_t k = 0; k < table.coef.size(); ++k) {
    const double w = k % 2 == 0 ? even_weight : odd_weight;
    quad_t term = table.coef[k] * power;
    if (shift) term /= static_cast<quad_t>(k + 1);
    sum += term * static_cast<quad_t>(w);

    const double kd = static_cast<double>(k);
    const double lt = table.log_mag[k] + (kd + shift) * log_x - (shift ? std::log(kd + 1.0) : 0.0);
    if (lt < log_stop && lt < previous) return static_cast<double>(sum);
    previous = lt;
    power *= xq;
  }
  throw NonConvergent("airy series: coefficient table exhausted at x = " + std::to_string(x));
}

}  // namespace

GeneralizedAiry generalized_airy(AiryOrder order) {
  constexpr std::size_t kSlots = 8;
  thread_local std::vector<GeneralizedAiry> cache;
  thread_local std::size_t next_slot = 0;
  for (const GeneralizedAiry& ai : cache) {
    if (ai.alpha() == order.value()) return ai;
  }
  GeneralizedAiry fresh(order);
  if (cache.size() < kSlots) {
    cache.push_back(fresh);
  } else {
    cache[next_slot] = fresh;
    next_slot = (next_slot + 1) % kSlots;
  }
  return fresh;
}

GeneralizedAiry::GeneralizedAiry(AiryOrder order) : table_(build_table(order.value())) {}

double GeneralizedAiry::alpha() const { return table_->alpha; }

double GeneralizedAiry::series_range() const { return table_->range; }

bool GeneralizedAiry::in_series_range(double x) const { return std::fabs(x) <= table_->range; }

double GeneralizedAiry::operator()(double x) const {
  if (std::isnan(x)) detail::throw_domain("airy argument x", x, "must not be NaN");
  return in_series_range(x) ? series(x) : quadrature(x);
}

double GeneralizedAiry::series(double x, double tol) const {
  if (std::isnan(x)) detail::throw_domain("airy argument x", x, "must not be NaN");
  return sum_series(*table_, x, 1.0, 1.0, 0, tol);
}

double GeneralizedAiry::quadrature(double x, double tol) const {
  if (!std::isfinite(x)) return 0.0;
  return detail::power_phase_integral(x, table_->alpha, detail::PowerPhaseKind::kCos, tol) / kPi;
}

double GeneralizedAiry::weighted_series(double x, double even_weight, double odd_weight) const {
  return sum_series(*table_, x, even_weight, odd_weight, 0, 1e-16);
}

double GeneralizedAiry::weighted_integral_series(double x, double even_weight,
                                                 double odd_weight) const {
  return sum_series(*table_, x, even_weight, odd_weight, 1, 1e-16);
}

double GeneralizedAiry::integral(double x) const {
  if (std::isnan(x)) detail::throw_domain("airy argument x", x, "must not be NaN");
  if (in_series_range(x)) {
    return 0.5 + 0.5 / table_->alpha + weighted_integral_series(x, 1.0, 1.0);
  }
  return integral_quadrature(x);
}

double GeneralizedAiry::integral_quadrature(double x, double tol) const {
  if (x == INFINITY) return 1.0;
  if (x == -INFINITY) return 0.0;
  if (x == 0.0) return 0.5 + 0.5 / table_->alpha;
  return 0.5 +
         detail::power_phase_integral(x, table_->alpha, detail::PowerPhaseKind::kSinOverS, tol) /
             kPi;
}

double airy_series(double x, AiryOrder order, double tol) {
  return generalized_airy(order).series(x, tol);
}

double airy_quadrature(double x, AiryOrder order, double tol) {
  return generalized_airy(order).quadrature(x, tol);
}

double airy_series_range(AiryOrder order) { return generalized_airy(order).series_range(); }

double airy(double x, AiryOrder order) { return generalized_airy(order)(x); }

double airy_integral(double x, AiryOrder order) { return generalized_airy(order).integral(x); }

double reciprocal_gamma(double z) {
  if (std::isnan(z)) return z;
  if (z <= 0.0 && z == std::floor(z)) return 0.0;
  if (z >= 0.5) {
    if (z > 171.0) return std::exp(-std::lgamma(z));
    return 1.0 / std::tgamma(z);
  }
  // 1 / Gamma(z) = Gamma(1 - z) sin(pi z) / pi
  const double s = boost::math::sin_pi(z);
  const double w = 1.0 - z;
  const double g = w > 171.0 ? std::exp(std::lgamma(w)) : std::tgamma(w);
  return g * s / kPi;
}

double weibull_pdf(double y, WeibullParams params) {
  if (!(params.shape > 0.0) || !std::isfinite(params.shape)) {
    detail::throw_domain("weibull shape", params.shape, "must be finite and > 0");
  }
  if (!(params.scale > 0.0) || !std::isfinite(params.scale)) {
    detail::throw_domain("weibull scale", params.scale, "must be finite and > 0");
  }
  if (!(y > 0.0)) detail::throw_domain("weibull argument y", y, "must be > 0");
  if (y == INFINITY) return 0.0;
  const double g = params.shape;
  const double yg = std::pow(y, g);
  return g * yg / y / params.scale * std::exp(-yg / params.scale);
}

}  // namespace fresnel
