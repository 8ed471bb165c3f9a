#pragma once

// Signed measure of cylinder events
//   { a_j <= X(t_j) <= b_j, j = 1..m },  X(0) = 0,
// under the pseudoprocess with kernel u(x, t) of fresnel_density.hpp.

#include <cstddef>
#include <vector>

namespace fresnel {

struct Box {
  double lo;  ///< may be -inf
  double hi;  ///< may be +inf
};

struct CylinderEvent {
  std::vector<double> times;  ///< strictly increasing, > 0
  std::vector<Box> boxes;     ///< one per time, lo < hi

  /// Throws DomainError on malformed events.
  void validate() const;
};

/// Kernel parameters without the time, which comes from the event.
struct KernelParams {
  double alpha = 2.0;
  double p = 0.5;
};

inline constexpr std::size_t kMaxCylinderDepth = 3;

/// Iterated integral of prod_j u(x_j - x_{j-1}, t_j - t_{j-1}) over the boxes.
///
/// The innermost box is integrated exactly through the signed distribution
/// function. Full-line boxes are removed analytically: trailing ones
/// integrate to 1, interior ones are replaced by the convolution of the
/// neighbouring kernels, computed term by term in Fourier space. The
/// remaining boxes before the last must be bounded; a half-infinite interior
/// box gives only a conditionally convergent integral and is rejected with
/// QuadratureFailure.
///
/// Throws DimensionCap for more than kMaxCylinderDepth times and
/// QuadratureFailure when the adaptive error estimate exceeds tol.
double cylinder_measure(const CylinderEvent& event, KernelParams params, double tol = 1e-9);

}  // namespace fresnel
