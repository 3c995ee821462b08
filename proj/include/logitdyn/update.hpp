#pragma once

/**
 * Logit-update dynamics for softmax policies.
 *
 * One experience (chosen action c, advantage A, learning rate eta) moves the
 * logits by
 *
 *     delta_j = eta * A * (kronecker(c, j) - P_j)
 *
 * so the chosen logit gains eta*(1 - P_c)*A while every other logit loses
 * eta*P_o*A. The deltas always sum to zero: updates redistribute relative
 * strength instead of shifting all logits together. The L2 norm of the
 * update collapses to the closed form
 *
 *     |delta| = eta * |A| * sqrt(1 - 2*P_c + C(P))
 *
 * with C(P) the collision probability, which is what ties update vigor to
 * policy concentration.
 */

#include <cstddef>
#include <vector>

#include "logitdyn/simplex.hpp"

namespace logitdyn {

// Conservation tolerance: |sum of deltas| <= tol * max(1, max |delta|).
inline constexpr double kConservationTolerance = 1e-12;

// The magnitude radicand 1 - 2*P_c + C(P) is mathematically >= 0; round-off
// near P_c = 1 may push it this far below zero before it is clamped.
inline constexpr double kRadicandSlack = 1e-12;

/// One reinforcement experience: which action was taken, the scalar credit
/// it earned, and the step size to apply.
struct Experience {
  std::size_t chosen;
  double advantage;
  double learning_rate;

  Experience(std::size_t chosen, double advantage, double learning_rate);
};

/// Per-logit increments produced by one experience. Entries sum to zero
/// within kConservationTolerance (relative to the largest delta).
class UpdateVector {
 public:
  explicit UpdateVector(std::vector<double> deltas);

  std::size_t size() const { return deltas_.size(); }
  double operator[](std::size_t i) const { return deltas_[i]; }
  const std::vector<double>& deltas() const { return deltas_; }

 private:
  std::vector<double> deltas_;
};

/// Gradient of log P_chosen with respect to each logit: 1 - P_c at the
/// chosen index, -P_j elsewhere. Entries sum to zero.
std::vector<double> score_vector(const ProbDist& p, std::size_t chosen);

/// deltas = learning_rate * advantage * score_vector(p, chosen).
UpdateVector update_vector(const ProbDist& p, const Experience& e);

/// Closed-form L2 norm of update_vector(p, e):
/// eta * |A| * sqrt(1 - 2*P_c + C(P)).
double update_magnitude(const ProbDist& p, const Experience& e);

/// The policy-dependent part of the update norm, sqrt(1 - 2*P_c + C(P)).
/// Zero when the chosen action is deterministic; approaches sqrt(2) when an
/// improbable action is chosen while the policy is concentrated elsewhere.
double sensitivity_factor(const ProbDist& p, std::size_t chosen);

/// Entrywise z + u. The logit sum is preserved up to float round-off.
Logits apply_update(const Logits& z, const UpdateVector& u);

namespace detail {

/// 1 - 2*p_chosen + collision with tiny negative round-off clamped to zero.
/// Anything below -kRadicandSlack indicates inconsistent inputs and throws.
double magnitude_radicand(double p_chosen, double collision);

}  // namespace detail

}  // namespace logitdyn
