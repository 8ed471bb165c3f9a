#include "fresnel/stable_sampling.hpp"

#include <cmath>
#include <numbers>

#include "fresnel/errors.hpp"

namespace fresnel {

namespace {

constexpr double kPi = std::numbers::pi;

void check_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) detail::throw_domain("t", t, "must be finite and > 0");
}

void check_weight(double p) {
  if (!(p >= 0.0 && p <= 1.0)) detail::throw_domain("p", p, "must lie in [0, 1]");
}

/// One CMS draw at unit time with sigma = 1, mu = 0. With
/// B = arctan(beta tan(pi nu / 2)) / nu and S = (1 + beta^2 tan^2)^{1/(2 nu)}:
///   X = S sin(nu (V + B)) / cos(V)^{1/nu} (cos(V - nu (V + B)) / W)^{(1 - nu)/nu}.
class CmsKernel {
 public:
  CmsKernel(double nu, double beta) : nu_(nu) {
    const double zeta = beta * std::tan(0.5 * kPi * nu);
    shift_ = std::atan(zeta) / nu;
    scale_ = std::pow(1.0 + zeta * zeta, 0.5 / nu);
  }

  double operator()(Rng& rng) const {
    const double v = kPi * (rng.uniform() - 0.5);
    const double w = rng.exponential();
    const double vb = nu_ * (v + shift_);
    return scale_ * std::sin(vb) / std::pow(std::cos(v), 1.0 / nu_) *
           std::pow(std::cos(v - vb) / w, (1.0 - nu_) / nu_);
  }

 private:
  double nu_;
  double shift_ = 0.0;
  double scale_ = 1.0;
};

}  // namespace

std::vector<double> sample_stable(const StableParams& params, double t, std::size_t n,
                                  SeededStream stream) {
  params.validate();
  check_time(t);
  const CmsKernel kernel(params.nu, params.beta);
  const double spread = std::pow(t, 1.0 / params.nu) * params.sigma;
  const double drift = params.mu * t;
  Rng rng(stream);
  std::vector<double> out(n);
  for (double& x : out) x = spread * kernel(rng) + drift;
  return out;
}

std::vector<double> sample_mixture(const MixtureSpec& spec, std::size_t n, SeededStream stream) {
  spec.stable.validate();
  check_weight(spec.p);
  check_time(spec.t);
  const CmsKernel kernel(spec.stable.nu, spec.stable.beta);
  const double spread = std::pow(spec.t, 1.0 / spec.stable.nu) * spec.stable.sigma;
  const double drift = spec.stable.mu * spec.t;
  Rng rng(stream);
  std::vector<double> out(n);
  for (double& x : out) {
    const double h = spread * kernel(rng) + drift;
    x = rng.uniform() < spec.p ? h : -h;
  }
  return out;
}

std::vector<double> sample_cauchy_mixture(double alpha, double p, double t, std::size_t n,
                                          SeededStream stream) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    detail::throw_domain("alpha", alpha, "must be finite and > 1");
  }
  check_weight(p);
  check_time(t);
  const double location = t * std::sin(kPi / (2.0 * alpha));
  const double scale = t * std::cos(kPi / (2.0 * alpha));
  Rng rng(stream);
  std::vector<double> out(n);
  for (double& x : out) {
    const double centre = rng.uniform() < p ? location : -location;
    x = centre + scale * std::tan(kPi * (rng.uniform() - 0.5));
  }
  return out;
}

std::vector<double> sample_subordinator(double theta, double t, std::size_t n,
                                        SeededStream stream) {
  if (!(theta > 0.0 && theta < 1.0)) detail::throw_domain("theta", theta, "must lie in (0, 1)");
  const StableParams params{theta, std::pow(std::cos(0.5 * kPi * theta), 1.0 / theta), 1.0, 0.0};
  std::vector<double> out = sample_stable(params, t, n, stream);
  // Rounding can leave -0.0 or a denormal negative at the lower edge.
  for (double& x : out) x = std::fmax(x, 0.0);
  return out;
}

MixtureSpec mixture_for(const SubordinationSpec& spec, double t) {
  check_time(t);
  const StableMap map = parameter_map(spec);
  if (std::holds_alternative<CauchyCase>(map)) {
    throw UnsupportedExponent("alpha * theta = 1: use sample_cauchy_mixture");
  }
  return {std::get<StableParams>(map), 1.0 - spec.p, t};
}

std::vector<double> sample_subordinated(const SubordinationSpec& spec, double t, std::size_t n,
                                        SeededStream stream) {
  const StableMap map = parameter_map(spec);
  if (std::holds_alternative<CauchyCase>(map)) {
    return sample_cauchy_mixture(spec.alpha, spec.p, t, n, stream);
  }
  return sample_mixture(mixture_for(spec, t), n, stream);
}

std::complex<double> empirical_char_fn(std::span<const double> samples, double gamma) {
  if (samples.empty()) throw DomainError("empirical_char_fn: no samples");
  double re = 0.0;
  double im = 0.0;
  for (const double x : samples) {
    re += std::cos(gamma * x);
    im += std::sin(gamma * x);
  }
  const double n = static_cast<double>(samples.size());
  return {re / n, im / n};
}

}  // namespace fresnel
