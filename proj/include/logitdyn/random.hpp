#pragma once

// Seeded sampling helpers. std::mt19937_64 is fully specified by the
// standard, and the conversions below avoid the implementation-defined
// std::*_distribution classes, so streams are reproducible bit-for-bit
// across platforms.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "logitdyn/simplex.hpp"

namespace logitdyn {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller; consumes two uniforms per draw.
inline double gaussian_unit(Rng& rng) {
  const double u1 = uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
  return radius * std::cos(2.0 * std::numbers::pi * u2);
}

/// Index sample from a distribution by inverse-CDF scan.
inline std::size_t sample_index(const ProbDist& p, Rng& rng) {
  const double u = uniform_unit(rng);
  double cumulative = 0.0;
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    cumulative += p[j];
    if (u < cumulative) return j;
  }
  return p.size() - 1;
}

/// Uniform (flat Dirichlet) simplex point: normalized independent Exp(1)
/// draws.
inline ProbDist random_simplex(std::size_t n, Rng& rng) {
  std::vector<double> weights(n);
  double sum = 0.0;
  do {
    sum = 0.0;
    for (double& w : weights) {
      w = -std::log(1.0 - uniform_unit(rng));
      sum += w;
    }
  } while (!(sum > 0.0));
  for (double& w : weights) w /= sum;
  return ProbDist(std::move(weights));
}

}  // namespace logitdyn
