#pragma once

// Quad-precision helpers for the power series kernels. The Airy and
// subordinated-density series cancel heavily for moderate |x|; summing in
// __float128 keeps ~16 significant digits while the peak term stays below
// kSeriesPeakLimit.

#include <quadmath.h>

namespace fresnel::detail {

using quad_t = __float128;

/// Largest admissible peak term magnitude for a quad-precision sum.
inline constexpr double kSeriesPeakLimit = 1e18;

/// Natural log of kSeriesPeakLimit.
inline constexpr double kLogSeriesPeakLimit = 41.446531673892822;

inline quad_t pi_q() { return M_PIq; }

/// sin(pi * r), reducing r modulo 2 before scaling.
inline quad_t sin_pi_q(quad_t r) {
  const quad_t reduced = r - 2 * floorq(r / 2);
  return sinq(M_PIq * reduced);
}

}  // namespace fresnel::detail
