#include "fresnel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fresnel/errors.hpp"

namespace fresnel::quad {

double Tolerance::bound(double value) const {
  return std::max(abs, rel * std::fabs(value));
}

namespace {

struct Segment {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment evaluate(const Integrand& f, double a, double b) {
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(
      f, a, b, 0, 0.0, &error);
  // With max_depth = 0 Boost reports the estimate on the reference interval
  // [-1, 1]; rescale it to [a, b].
  return {a, b, value, error * std::fabs(b - a) * 0.5};
}

}  // namespace

Result adaptive(const Integrand& f, double a, double b, Tolerance tol,
                std::size_t max_segments) {
  Result out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Segment> heap;
  heap.push(evaluate(f, a, b));
  out.evaluations = 21;
  double total = heap.top().value;
  double error = heap.top().error;

  while (error > tol.bound(total) && heap.size() < max_segments) {
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
      break;  // interval exhausted in floating point
    }
    heap.pop();
    const Segment left = evaluate(f, worst.a, mid);
    const Segment right = evaluate(f, mid, worst.b);
    out.evaluations += 42;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the segments to shed the drift of the running updates.
  total = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  out.value = total;
  out.error = error;
  out.converged = std::isfinite(total) && error <= tol.bound(total);
  return out;
}

double integrate(const Integrand& f, double a, double b, Tolerance tol,
                 std::string_view what) {
  const Result r = adaptive(f, a, b, tol);
  if (!r.converged) {
    char buf[160];
    std::snprintf(buf, sizeof buf, ": error estimate %.3e exceeds tolerance %.3e on [%.6g, %.6g]",
                  r.error, tol.bound(r.value), a, b);
    throw QuadratureFailure(std::string(what) + buf);
  }
  return r.value;
}

double gauss_legendre(const Integrand& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 30>::integrate(f, a, b);
}

Extrapolation wynn_epsilon(std::span<const double> partial_sums) {
  const std::size_t n = partial_sums.size();
  Extrapolation best{n ? partial_sums.back() : 0.0,
                     n > 1 ? std::fabs(partial_sums[n - 1] - partial_sums[n - 2])
                           : std::numeric_limits<double>::infinity()};
  if (n < 3) return best;

  // prev = column k-1, cur = column k; epsilon_{k+1}^{(i)} =
  // epsilon_{k-1}^{(i+1)} + 1 / (epsilon_k^{(i+1)} - epsilon_k^{(i)}).
  std::vector<double> prev(n + 1, 0.0);
  std::vector<double> cur(partial_sums.begin(), partial_sums.end());
  for (std::size_t column = 1; cur.size() > 2; ++column) {
    std::vector<double> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0 || !std::isfinite(diff)) return best;
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (column % 2 == 0 && cur.size() >= 2) {
      const double err = std::fabs(cur.back() - cur[cur.size() - 2]);
      if (std::isfinite(cur.back()) && err < best.error) {
        best = {cur.back(), err};
      }
    }
  }
  return best;
}

}  // namespace fresnel::quad
