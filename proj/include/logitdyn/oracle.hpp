#pragma once

/**
 * Independent numerical verification of the closed-form claims: central
 * finite differences against the analytic score vector, brute-force norms
 * against the magnitude formula, Monte-Carlo collision estimates, and the
 * Renyi -> Shannon limit. Nothing here reuses the code path it checks.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "logitdyn/random.hpp"
#include "logitdyn/simplex.hpp"
#include "logitdyn/update.hpp"

namespace logitdyn::oracle {

// Central differences stop being trustworthy past this step size.
inline constexpr double kMaxFiniteDiffStep = 1e-2;

/// Outcome of a sweep comparing analytic score entries against central
/// differences: the worst absolute error and where it occurred.
struct GradCheckReport {
  double max_abs_err = 0.0;
  std::pair<std::size_t, std::size_t> worst_indices{0, 0};  // (i, j)
  double step_size = 0.0;
};

/// Central-difference approximation of d log softmax_i / d z_j for all j:
/// [log P_i(z + step e_j) - log P_i(z - step e_j)] / (2 step).
/// step must lie in (0, kMaxFiniteDiffStep].
std::vector<double> finite_diff_score(const Logits& z, std::size_t i,
                                      double step);

/// Compares score_vector against central differences over `num_vectors`
/// random logit vectors of length `n_actions`, all (i, j) pairs.
GradCheckReport grad_check(std::size_t n_actions, std::size_t num_vectors,
                           double step, Rng& rng);

/// L2 norm of the update computed by explicitly summing squared deltas,
/// with no use of the closed-form magnitude.
double brute_force_magnitude(const ProbDist& p, const Experience& e);

/// Fraction of `pairs` i.i.d. sample pairs from p that coincide. Standard
/// error is at most sqrt(C(1-C)/pairs). Identical seeds give identical
/// estimates.
double mc_collision_estimate(const ProbDist& p, std::uint64_t pairs,
                             std::uint64_t seed);

/// |H_alpha(p) - H(p)| for each alpha; decreases toward 0 as alpha -> 1.
std::vector<double> renyi_limit_check(const ProbDist& p,
                                      const std::vector<double>& alphas);

/// True iff H_2(p) <= H(p) + 1e-12 and C(p) >= exp(-H(p)) - 1e-12.
bool entropy_ordering_check(const ProbDist& p);

}  // namespace logitdyn::oracle
