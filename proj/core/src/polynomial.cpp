#include "fresnel/polynomial.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "fresnel/errors.hpp"

namespace fresnel::poly {

namespace {

/// Parlett-Reinsch balancing with power-of-two scalings (exact in binary),
/// which keeps eigenvalues of badly scaled companion matrices accurate.
void balance(Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double col = m.col(i).cwiseAbs().sum() - std::fabs(m(i, i));
      const double row = m.row(i).cwiseAbs().sum() - std::fabs(m(i, i));
      if (col == 0.0 || row == 0.0) continue;
      // Find f = 2^k with col * f roughly equal to row / f.
      double f = 1.0;
      double c = col;  // tracks col * f^2
      const double total = col + row;
      while (c < row / 2.0) {
        c *= 4.0;
        f *= 2.0;
      }
      while (c >= row * 2.0) {
        c /= 4.0;
        f /= 2.0;
      }
      if ((c + row) / f < 0.95 * total) {
        changed = true;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

}  // namespace

double evaluate(std::span<const double> c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Coefficients derivative(std::span<const double> c) {
  if (c.size() <= 1) return {0.0};
  Coefficients out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = static_cast<double>(k) * c[k];
  return out;
}

std::vector<std::complex<double>> roots(std::span<const double> c) {
  std::size_t n = c.size();
  while (n > 0 && c[n - 1] == 0.0) --n;
  if (n == 0) throw RootFindingFailure("roots: zero polynomial");
  const std::size_t degree = n - 1;
  if (degree == 0) return {};

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (std::size_t i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < degree; ++i) companion(i, degree - 1) = -c[i] / c[degree];

  balance(companion);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw RootFindingFailure("roots: eigenvalue solver failed");
  const auto values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

double polish_bracketed(std::span<const double> c, double lo, double hi) {
  const Coefficients dc = derivative(c);
  double f_lo = evaluate(c, lo);
  const double f_hi = evaluate(c, hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw RootFindingFailure("polish_bracketed: no sign change on the bracket");
  }
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = evaluate(c, x);
    if (f == 0.0) return x;
    if ((f > 0.0) == (f_lo > 0.0)) {
      lo = x;
      f_lo = f;
    } else {
      hi = x;
    }
    const double d = evaluate(dc, x);
    double next = d != 0.0 ? x - f / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(x)) {
      return next;
    }
    x = next;
  }
  return x;
}

}  // namespace fresnel::poly
