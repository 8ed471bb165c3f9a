#include "fresnel/signed_measure.hpp"

#include <cmath>
#include <string>

#include "fresnel/errors.hpp"
#include "fresnel/quadrature.hpp"
#include "fresnel/special_fn.hpp"

namespace fresnel {

namespace {

// Every kernel here is a finite combination of pure branches v(x; T) with
// Fourier transform exp(i sgn(g) |g|^alpha T): for T > 0 it is the p-branch
// c^{-1} Ai(-x/c), for T < 0 the (1-p)-branch c^{-1} Ai(x/c) with
// c = (alpha |T|)^{1/alpha}, and T = 0 is the point mass at 0. Convolution
// adds signed times, so the algebra closes.
struct Branch {
  double weight;
  double signed_time;
};

using Kernel = std::vector<Branch>;

Kernel step_kernel(double dt, double p) {
  Kernel k;
  if (p != 0.0) k.push_back({p, dt});
  if (p != 1.0) k.push_back({1.0 - p, -dt});
  return k;
}

Kernel convolve(const Kernel& lhs, const Kernel& rhs) {
  Kernel out;
  for (const Branch& a : lhs) {
    for (const Branch& b : rhs) {
      double time = a.signed_time + b.signed_time;
      const double size = std::fabs(a.signed_time) + std::fabs(b.signed_time);
      if (std::fabs(time) <= 1e-14 * size) time = 0.0;
      bool merged = false;
      for (Branch& c : out) {
        if (c.signed_time == time) {
          c.weight += a.weight * b.weight;
          merged = true;
          break;
        }
      }
      if (!merged) out.push_back({a.weight * b.weight, time});
    }
  }
  return out;
}

struct Level {
  Box box;
  Kernel kernel;  // from the previous kept level (or the origin) to this one
};

class Evaluator {
 public:
  Evaluator(double alpha, std::vector<Level> levels, double tol)
      : alpha_(alpha), ai_(generalized_airy(AiryOrder(alpha))), levels_(std::move(levels)),
        tol_(tol) {}

  double run() { return level_value(0, 0.0, tol_); }

 private:
  double scale(double time) const { return std::pow(alpha_ * std::fabs(time), 1.0 / alpha_); }

  double branch_density(double y, double time) const {
    const double c = scale(time);
    return ai_(time > 0.0 ? -y / c : y / c) / c;
  }

  /// int_{-inf}^y v(x; T) dx.
  double branch_cdf(double y, double time) const {
    if (y == INFINITY) return 1.0;
    if (y == -INFINITY) return 0.0;
    if (time == 0.0) return y >= 0.0 ? 1.0 : 0.0;
    const double c = scale(time);
    return time > 0.0 ? 1.0 - ai_.integral(-y / c) : ai_.integral(y / c);
  }

  double level_value(std::size_t index, double x_prev, double tol) const {
    const Level& level = levels_[index];
    const Box box = level.box;
    if (index + 1 == levels_.size()) {
      double total = 0.0;
      for (const Branch& br : level.kernel) {
        if (br.signed_time == 0.0) {
          if (x_prev >= box.lo && x_prev <= box.hi) total += br.weight;
          continue;
        }
        total += br.weight *
                 (branch_cdf(box.hi - x_prev, br.signed_time) - branch_cdf(box.lo - x_prev, br.signed_time));
      }
      return total;
    }

    const double inner_tol = 1e-2 * tol / std::max(1.0, box.hi - box.lo);
    double total = 0.0;
    bool has_density = false;
    for (const Branch& br : level.kernel) {
      if (br.signed_time == 0.0) {
        if (x_prev >= box.lo && x_prev <= box.hi) {
          total += br.weight * level_value(index + 1, x_prev, tol);
        }
      } else {
        has_density = true;
      }
    }
    if (!has_density) return total;

    auto integrand = [&](double x) {
      double kernel = 0.0;
      for (const Branch& br : level.kernel) {
        if (br.signed_time != 0.0) kernel += br.weight * branch_density(x - x_prev, br.signed_time);
      }
      return kernel * level_value(index + 1, x, inner_tol);
    };
    total += quad::integrate(integrand, box.lo, box.hi, {tol, 1e-12}, "cylinder measure");
    return total;
  }

  double alpha_;
  GeneralizedAiry ai_;
  std::vector<Level> levels_;
  double tol_;
};

bool full_line(const Box& b) { return b.lo == -INFINITY && b.hi == INFINITY; }

}  // namespace

void CylinderEvent::validate() const {
  if (times.empty()) throw DomainError("cylinder event: no times");
  if (times.size() != boxes.size()) {
    throw DomainError("cylinder event: " + std::to_string(times.size()) + " times but " +
                      std::to_string(boxes.size()) + " boxes");
  }
  double previous = 0.0;
  for (const double t : times) {
    if (!(t > previous) || !std::isfinite(t)) {
      detail::throw_domain("cylinder time", t, "must be finite and exceed the previous time");
    }
    previous = t;
  }
  for (const Box& b : boxes) {
    if (std::isnan(b.lo) || std::isnan(b.hi) || !(b.lo < b.hi)) {
      throw DomainError("cylinder box: need lo < hi, got [" + std::to_string(b.lo) + ", " +
                        std::to_string(b.hi) + "]");
    }
  }
}

double cylinder_measure(const CylinderEvent& event, KernelParams params, double tol) {
  event.validate();
  if (!(params.alpha > 1.0) || !std::isfinite(params.alpha)) {
    detail::throw_domain("alpha", params.alpha, "must be finite and > 1");
  }
  if (!(params.p >= 0.0 && params.p <= 1.0)) detail::throw_domain("p", params.p, "must lie in [0, 1]");
  if (!(tol > 0.0)) detail::throw_domain("tol", tol, "must be > 0");
  if (event.times.size() > kMaxCylinderDepth) {
    throw DimensionCap("cylinder event with " + std::to_string(event.times.size()) +
                       " times exceeds the supported depth " + std::to_string(kMaxCylinderDepth));
  }

  std::size_t last = event.times.size();
  while (last > 0 && full_line(event.boxes[last - 1])) --last;
  if (last == 0) return 1.0;

  std::vector<Level> levels;
  Kernel pending{{1.0, 0.0}};
  double previous_time = 0.0;
  for (std::size_t j = 0; j < last; ++j) {
    pending = convolve(pending, step_kernel(event.times[j] - previous_time, params.p));
    previous_time = event.times[j];
    if (full_line(event.boxes[j])) continue;
    levels.push_back({event.boxes[j], pending});
    pending = {{1.0, 0.0}};
  }

  for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
    const Box& b = levels[j].box;
    if (!std::isfinite(b.lo) || !std::isfinite(b.hi)) {
      throw QuadratureFailure(
          "cylinder measure: half-infinite box before the last time gives a conditionally "
          "convergent integral; split it or make it the full line");
    }
  }
  return Evaluator(params.alpha, std::move(levels), tol).run();
}

}  // namespace fresnel
