#pragma once

namespace fresnel::detail {

/// Integrands of the form amplitude(s) * trig(s x + s^alpha / alpha) on [0, inf).
enum class PowerPhaseKind {
  kCos,        ///< cos(phase)
  kSinOverS,   ///< sin(phase) / s
};

/// Evaluates the conditionally convergent integral
///   int_0^inf amplitude(s) trig(phi(s)) ds,   phi(s) = s x + s^alpha / alpha.
///
/// phi is convex with at most one stationary point s0 = (-x)^{1/(alpha-1)}.
/// [0, s0] and the start of the increasing branch are cut into half-wave
/// panels at the zeros of trig(phi) and integrated directly; beyond
/// max(2 s0, 1) the half-wave contributions form an alternating sequence
/// whose partial sums are extrapolated with Wynn's epsilon algorithm.
/// Throws NonConvergent when the extrapolated tail does not settle to `tol`.
double power_phase_integral(double x, double alpha, PowerPhaseKind kind, double tol);

}  // namespace fresnel::detail
