#pragma once

/**
 * Probability-simplex primitives: the softmax transform, collision
 * probability, and the Renyi/Shannon entropy family.
 *
 * All quantities use natural logarithms (nats). Values are immutable after
 * construction and safe to share across threads; every operation here is a
 * pure function of its inputs.
 */

#include <cstddef>
#include <vector>

namespace logitdyn {

// Absolute tolerance on the simplex sum invariant.
inline constexpr double kSimplexSumTolerance = 1e-12;

// Constructors renormalize sums deviating by at most this much and reject
// anything worse, so accumulated float error is absorbed without masking
// genuinely broken inputs.
inline constexpr double kSimplexRenormLimit = 1e-9;

// Guard band around alpha = 1 where the Renyi formula degenerates; callers
// wanting the alpha -> 1 limit use shannon_entropy instead.
inline constexpr double kRenyiAlphaGuard = 1e-9;

/// Raw pre-softmax action scores. At least two actions, all entries finite.
class Logits {
 public:
  explicit Logits(std::vector<double> values);

  /// All-zero logits: the uniform policy, the natural high-entropy start.
  static Logits zeros(std::size_t n);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// A point on the probability simplex over n >= 2 actions. Entries are
/// non-negative and sum to 1 within kSimplexSumTolerance.
class ProbDist {
 public:
  explicit ProbDist(std::vector<double> probs);

  static ProbDist uniform(std::size_t n);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

/// Collision probability, order-2 Renyi entropy, and Shannon entropy of one
/// distribution. renyi2 == -ln(collision), and renyi2 <= shannon with
/// equality iff the distribution is uniform over its support.
struct EntropyReport {
  double collision;  // sum of squared probabilities, in [1/n, 1]
  double renyi2;     // -ln(collision), nats
  double shannon;    // -sum p ln p, nats
};

/// Softmax transform P_i = e^{z_i} / sum_k e^{z_k}, computed with
/// max-subtraction so large logits cannot overflow.
ProbDist softmax(const Logits& z);

/// C(P) = sum_i p_i^2: the chance that two independent samples from P
/// coincide. Ranges over [1/n, 1]; minimal at uniform, 1 at deterministic.
double collision_probability(const ProbDist& p);

/// Renyi entropy of order alpha, (1/(1-alpha)) ln sum_i p_i^alpha, in nats.
/// Requires alpha > 0 and |alpha - 1| > kRenyiAlphaGuard. Zero-probability
/// entries are excluded from the sum.
double renyi_entropy(const ProbDist& p, double alpha);

/// Shannon entropy -sum_i p_i ln p_i in nats, with the 0 ln 0 := 0 limit
/// convention. Result lies in [0, ln n].
double shannon_entropy(const ProbDist& p);

/// All three concentration measures in one pass-consistent bundle.
EntropyReport entropy_report(const ProbDist& p);

}  // namespace logitdyn
