#pragma once

// Samplers for stable laws, theta-stable subordinators and the sign
// mixtures that realise the subordinated pseudoprocess.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fresnel/rng.hpp"
#include "fresnel/subordination.hpp"

namespace fresnel {

/// +H with probability p, -H with probability 1 - p, H ~ stable at time t.
struct MixtureSpec {
  StableParams stable;
  double p = 0.5;
  double t = 1.0;
};

/// Chambers-Mallows-Stuck draws of the law with CF
/// exp(-t sigma^nu |g|^nu (1 - i beta sgn(g) tan(pi nu / 2)) + i mu t g).
/// Throws UnsupportedExponent for nu = 1.
std::vector<double> sample_stable(const StableParams& params, double t, std::size_t n,
                                  SeededStream stream);

std::vector<double> sample_mixture(const MixtureSpec& spec, std::size_t n, SeededStream stream);

/// Mixture of Cauchy laws with locations +t sin(pi / 2 alpha) (weight p) and
/// -t sin(pi / 2 alpha) (weight 1 - p), common scale t cos(pi / 2 alpha).
std::vector<double> sample_cauchy_mixture(double alpha, double p, double t, std::size_t n,
                                          SeededStream stream);

/// S_theta(t) with E exp(-l S) = exp(-t l^theta); all draws are >= 0.
std::vector<double> sample_subordinator(double theta, double t, std::size_t n,
                                        SeededStream stream);

/// Sign mixture whose law is that of the subordinated process at time t.
/// The (1 - i tan) component of subordinated_char_fn carries weight p and
/// equals the law of -H, so H itself gets weight 1 - p.
MixtureSpec mixture_for(const SubordinationSpec& spec, double t);

/// Draws Y(t) for the given spec: Cauchy mixture at nu = 1, otherwise the
/// sign mixture of mixture_for.
std::vector<double> sample_subordinated(const SubordinationSpec& spec, double t, std::size_t n,
                                        SeededStream stream);

/// (1/n) sum exp(i g X_j).
std::complex<double> empirical_char_fn(std::span<const double> samples, double gamma);

}  // namespace fresnel
