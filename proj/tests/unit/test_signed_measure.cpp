#include <cmath>
#include <vector>

#include "doctest.h"
#include "fresnel/errors.hpp"
#include "fresnel/fresnel_density.hpp"
#include "fresnel/signed_measure.hpp"
#include "oracles.hpp"

using namespace fresnel;

namespace {

constexpr double kInf = INFINITY;

double single(double t, Box box, KernelParams k) { return cylinder_measure({{t}, {box}}, k); }

}  // namespace

TEST_CASE("event validation") {
  const KernelParams k{2.0, 0.5};
  CHECK_THROWS_AS(cylinder_measure({{1.0, 0.5}, {{0, 1}, {0, 1}}}, k), DomainError);
  CHECK_THROWS_AS(cylinder_measure({{0.0}, {{0, 1}}}, k), DomainError);
  CHECK_THROWS_AS(cylinder_measure({{1.0}, {{1, 0}}}, k), DomainError);
  CHECK_THROWS_AS(cylinder_measure({{1.0, 2.0}, {{0, 1}}}, k), DomainError);
  CHECK_THROWS_AS(cylinder_measure({{1.0}, {{0, 1}}}, {1.0, 0.5}), DomainError);
  CHECK_THROWS_AS(cylinder_measure({{1.0}, {{0, 1}}}, k, 0.0), DomainError);
  CHECK_THROWS_AS(cylinder_measure({{1, 2, 3, 4}, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}}, k), DimensionCap);
}

TEST_CASE("full line has unit mass") {
  for (const KernelParams k : {KernelParams{2.0, 0.5}, KernelParams{1.5, 0.2}, KernelParams{3.5, 1.0}}) {
    for (const double t : {0.1, 1.0, 7.0}) {
      CHECK(std::fabs(single(t, {-kInf, kInf}, k) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("one time is the signed distribution function") {
  const KernelParams k{2.5, 0.3};
  const PseudoParams params{2.5, 0.3, 1.7};
  const double direct = oracle::integrate([&](double x) { return density(x, params); }, -1.0, 2.5, 40);
  CHECK(std::fabs(single(1.7, {-1.0, 2.5}, k) - direct) < 1e-12);
  CHECK(std::fabs(single(1.7, {-kInf, 0.0}, k) - signed_cdf(0.0, params)) < 1e-14);
}

TEST_CASE("additivity") {
  const KernelParams k{2.0, 0.5};
  const std::vector<double> cuts{-3.0, -0.4, 1.1, 2.9};
  const double whole = single(1.0, {cuts.front(), cuts.back()}, k);
  double parts = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) parts += single(1.0, {cuts[i], cuts[i + 1]}, k);
  CHECK(std::fabs(whole - parts) < 1e-12);

  // Also over the first coordinate of a two-time event.
  auto two = [&](Box first) { return cylinder_measure({{0.5, 1.5}, {first, {0.0, 2.0}}}, k); };
  CHECK(std::fabs(two({-1.0, 2.0}) - two({-1.0, 0.3}) - two({0.3, 2.0})) < 1e-8);
}

TEST_CASE("two times agree with tensor Gauss-Legendre") {
  for (const KernelParams k : {KernelParams{2.0, 0.5}, KernelParams{1.6, 0.25}, KernelParams{3.0, 0.8}}) {
    const double t1 = 0.6;
    const double t2 = 1.5;
    const Box b1{-1.0, 1.5};
    const Box b2{-0.5, 2.0};
    auto f = [&](double x1, double x2) {
      return density(x1, {k.alpha, k.p, t1}) * density(x2 - x1, {k.alpha, k.p, t2 - t1});
    };
    const double oracle_value = oracle::integrate_2d(f, b1.lo, b1.hi, b2.lo, b2.hi, 24);
    INFO("alpha = " << k.alpha << ", p = " << k.p);
    CHECK(std::fabs(cylinder_measure({{t1, t2}, {b1, b2}}, k) - oracle_value) < 1e-8);
  }
}

TEST_CASE("trailing full-line boxes are marginalised") {
  const KernelParams k{2.0, 0.5};
  CHECK(std::fabs(cylinder_measure({{1.0, 2.0}, {{-kInf, kInf}, {-kInf, kInf}}}, k) - 1.0) < 1e-12);
  const double one = single(1.0, {-0.7, 1.2}, k);
  CHECK(std::fabs(cylinder_measure({{1.0, 2.0}, {{-0.7, 1.2}, {-kInf, kInf}}}, k) - one) < 1e-12);
  CHECK(std::fabs(cylinder_measure({{1.0, 2.0, 4.0}, {{-0.7, 1.2}, {-kInf, kInf}, {-kInf, kInf}}}, k) -
                  one) < 1e-12);
}

TEST_CASE("full-line first box and the point mass of the product kernel") {
  // For p = 1/2, alpha = 2 the transform at the second time is
  // cos^2(g^2) = (1 + cos(2 g^2)) / 2: half a point mass at 0 and half the
  // kernel at time 2. This is not the kernel at time 2 itself.
  const KernelParams k{2.0, 0.5};
  for (const Box box : {Box{-1.0, 2.0}, Box{0.5, 3.0}}) {
    const double expected = 0.5 * (box.lo <= 0.0 && 0.0 <= box.hi ? 1.0 : 0.0) + 0.5 * single(2.0, box, k);
    const double value = cylinder_measure({{1.0, 2.0}, {{-kInf, kInf}, box}}, k);
    CHECK(std::fabs(value - expected) < 1e-10);
    CHECK(std::fabs(value - single(2.0, box, k)) > 1e-3);
  }
}

TEST_CASE("interior integral against a direct one-dimensional quadrature") {
  // int_{a1}^{b1} u(x1, t1) [U(b2 - x1, t2 - t1) - U(a2 - x1, t2 - t1)] dx1
  const KernelParams k{2.5, 0.4};
  const double t1 = 0.8;
  const double t2 = 2.0;
  const Box b1{-2.0, 1.0};
  const Box b2{-1.0, 0.5};
  auto inner = [&](double x1) {
    const PseudoParams step{k.alpha, k.p, t2 - t1};
    return density(x1, {k.alpha, k.p, t1}) * (signed_cdf(b2.hi - x1, step) - signed_cdf(b2.lo - x1, step));
  };
  const double direct = oracle::integrate(inner, b1.lo, b1.hi, 60);
  CHECK(std::fabs(cylinder_measure({{t1, t2}, {b1, b2}}, k) - direct) < 1e-9);
}

TEST_CASE("three times") {
  const KernelParams k{2.0, 0.5};
  const CylinderEvent event{{0.5, 1.0, 1.8}, {{-1.0, 1.0}, {-0.5, 1.5}, {0.0, 2.0}}};
  auto f = [&](double x1, double x2) {
    const PseudoParams last{2.0, 0.5, 0.8};
    return density(x1, {2.0, 0.5, 0.5}) * density(x2 - x1, {2.0, 0.5, 0.5}) *
           (signed_cdf(2.0 - x2, last) - signed_cdf(0.0 - x2, last));
  };
  const double oracle_value = oracle::integrate_2d(f, -1.0, 1.0, -0.5, 1.5, 16);
  CHECK(std::fabs(cylinder_measure(event, k, 1e-8) - oracle_value) < 1e-7);
}

TEST_CASE("the measure takes negative values") {
  const KernelParams k{2.0, 0.5};
  bool found = false;
  for (double lo = 0.0; lo < 6.0 && !found; lo += 0.5) {
    for (double width = 0.5; width <= 2.0 && !found; width += 0.5) {
      found = single(1.0, {lo, lo + width}, k) < 0.0;
    }
  }
  CHECK(found);
}

TEST_CASE("half-infinite interior box is rejected") {
  const KernelParams k{2.0, 0.5};
  CHECK_THROWS_AS(cylinder_measure({{1.0, 2.0}, {{0.0, kInf}, {0.0, 1.0}}}, k), QuadratureFailure);
}
