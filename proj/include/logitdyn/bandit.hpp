#pragma once

/**
 * Stateless multi-armed bandit simulator that iterates the logit update on
 * one experience per step, logging the quantities the update-magnitude
 * analysis is about: P_c, C(P), both entropies, and the update norm.
 *
 * A run is strictly sequential (each step depends on the previous logits);
 * independent runs with different seeds can execute in parallel.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "logitdyn/random.hpp"
#include "logitdyn/simplex.hpp"
#include "logitdyn/update.hpp"

namespace logitdyn::bandit {

enum class AdvantageMode {
  kExact,          // A = arm mean minus the unweighted mean over arms
  kSampledReward,  // A = noisy reward minus the configured baseline
};

enum class BaselineMode {
  kNone,         // sampled mode uses the raw reward
  kRunningMean,  // reward minus the running mean of earlier rewards
};

/// Testbed definition: expected reward per arm plus how advantages arise.
struct BanditEnv {
  std::vector<double> arm_means;
  double reward_noise_std = 0.0;
  AdvantageMode mode = AdvantageMode::kExact;

  BanditEnv(std::vector<double> means, double noise_std, AdvantageMode mode);

  std::size_t arms() const { return arm_means.size(); }
};

/// Loop configuration. Initial logits default to all-zeros (the uniform
/// policy, minimal C(P) = 1/n).
struct SimConfig {
  std::uint64_t steps = 1;
  double learning_rate = 0.1;
  std::uint64_t seed = 0;
  std::optional<Logits> initial_logits;  // zeros when absent
  BaselineMode baseline = BaselineMode::kNone;
  bool snapshot_logits = false;  // off by default to bound memory

  /// Throws std::invalid_argument naming the offending field.
  void validate(std::size_t n_arms) const;
};

/// Per-step snapshot. All policy-derived fields (p_chosen, collision,
/// shannon, renyi2) describe the distribution the action was sampled from,
/// i.e. before the update; update_norm is the L2 norm of the applied deltas.
struct TrajectoryRecord {
  std::uint64_t step = 0;
  std::size_t chosen = 0;
  double advantage = 0.0;
  double p_chosen = 0.0;
  double collision = 0.0;
  double shannon = 0.0;
  double renyi2 = 0.0;
  double update_norm = 0.0;
  std::optional<Logits> logits_snapshot;  // pre-update logits when enabled
};

/// Running mean of rewards, used as the sampled-mode baseline.
class RunningMean {
 public:
  double mean() const { return mean_; }
  std::uint64_t count() const { return count_; }
  void add(double x) {
    ++count_;
    mean_ += (x - mean_) / static_cast<double>(count_);
  }

 private:
  double mean_ = 0.0;
  std::uint64_t count_ = 0;
};

struct StepResult {
  Logits logits;  // post-update
  TrajectoryRecord record;
};

/// One experience: sample c ~ softmax(z), form the advantage per env.mode,
/// apply the logit update, and log the step.
StepResult step(const BanditEnv& env, const Logits& z, const SimConfig& cfg,
                std::uint64_t step_index, Rng& rng, RunningMean& baseline);

struct SimResult {
  std::vector<TrajectoryRecord> records;
  Logits final_logits;
  ProbDist final_policy;
};

/// Full loop: cfg.steps experiences, deterministic given cfg.seed.
SimResult run(const BanditEnv& env, const SimConfig& cfg);

// ---------------------------------------------------------------------------
// Sensitivity-factor sweep over a (p_chosen, collision) grid
// ---------------------------------------------------------------------------

struct SweepGrid {
  std::vector<double> p_chosen;
  std::vector<double> collision;
};

/// Row-major table of sqrt(1 - 2*p_c + C); cells with C < p_c^2 are
/// infeasible (no distribution attains them) and left empty.
struct SweepTable {
  SweepGrid grid;
  std::vector<std::optional<double>> cells;

  const std::optional<double>& at(std::size_t pc_index,
                                  std::size_t collision_index) const {
    return cells[pc_index * grid.collision.size() + collision_index];
  }
};

SweepTable sweep_sensitivity(const SweepGrid& grid);

}  // namespace logitdyn::bandit
