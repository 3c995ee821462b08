#include "logitdyn/bandit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "logitdyn/numeric.hpp"

namespace logitdyn::bandit {

namespace {

double mean_of(const std::vector<double>& xs) {
  return accurate_sum(xs) / static_cast<double>(xs.size());
}

double l2_norm(const std::vector<double>& xs) {
  NeumaierSum acc;
  for (double x : xs) acc.add(x * x);
  return std::sqrt(acc.value());
}

}  // namespace

BanditEnv::BanditEnv(std::vector<double> means, double noise_std,
                     AdvantageMode mode_in)
    : arm_means(std::move(means)), reward_noise_std(noise_std), mode(mode_in) {
  if (arm_means.size() < 2) {
    throw std::invalid_argument("BanditEnv: need at least 2 arms, got " +
                                std::to_string(arm_means.size()));
  }
  for (double m : arm_means) {
    if (!std::isfinite(m)) {
      throw std::invalid_argument("BanditEnv: arm means must be finite");
    }
  }
  if (!std::isfinite(reward_noise_std) || reward_noise_std < 0.0) {
    throw std::invalid_argument("BanditEnv: reward_noise_std must be >= 0");
  }
}

void SimConfig::validate(std::size_t n_arms) const {
  if (steps < 1) {
    throw std::invalid_argument("SimConfig: steps must be >= 1");
  }
  if (!std::isfinite(learning_rate) || !(learning_rate > 0.0)) {
    throw std::invalid_argument("SimConfig: learning_rate must be > 0");
  }
  if (initial_logits && initial_logits->size() != n_arms) {
    throw std::invalid_argument(
        "SimConfig: initial_logits length " +
        std::to_string(initial_logits->size()) + " does not match " +
        std::to_string(n_arms) + " arms");
  }
}

StepResult step(const BanditEnv& env, const Logits& z, const SimConfig& cfg,
                std::uint64_t step_index, Rng& rng, RunningMean& baseline) {
  if (env.arms() != z.size()) {
    throw std::invalid_argument("step: env has " + std::to_string(env.arms()) +
                                " arms but logits have " +
                                std::to_string(z.size()) + " entries");
  }

  const ProbDist policy = softmax(z);
  const std::size_t chosen = sample_index(policy, rng);

  double advantage = 0.0;
  if (env.mode == AdvantageMode::kExact) {
    advantage = env.arm_means[chosen] - mean_of(env.arm_means);
  } else {
    double reward = env.arm_means[chosen];
    if (env.reward_noise_std > 0.0) {
      reward += env.reward_noise_std * gaussian_unit(rng);
    }
    if (cfg.baseline == BaselineMode::kRunningMean) {
      advantage = reward - baseline.mean();
      baseline.add(reward);
    } else {
      advantage = reward;
    }
  }

  const Experience exp(chosen, advantage, cfg.learning_rate);
  const UpdateVector update = update_vector(policy, exp);
  Logits next = apply_update(z, update);

  const EntropyReport entropy = entropy_report(policy);
  TrajectoryRecord record{
      .step = step_index,
      .chosen = chosen,
      .advantage = advantage,
      .p_chosen = policy[chosen],
      .collision = entropy.collision,
      .shannon = entropy.shannon,
      .renyi2 = entropy.renyi2,
      .update_norm = l2_norm(update.deltas()),
      .logits_snapshot = std::nullopt,
  };
  if (cfg.snapshot_logits) {
    record.logits_snapshot = z;
  }
  return StepResult{std::move(next), std::move(record)};
}

SimResult run(const BanditEnv& env, const SimConfig& cfg) {
  cfg.validate(env.arms());

  Logits z = cfg.initial_logits ? *cfg.initial_logits
                                : Logits::zeros(env.arms());
  Rng rng(cfg.seed);
  RunningMean baseline;

  std::vector<TrajectoryRecord> records;
  records.reserve(cfg.steps);
  for (std::uint64_t t = 0; t < cfg.steps; ++t) {
    StepResult result = step(env, z, cfg, t, rng, baseline);
    z = std::move(result.logits);
    records.push_back(std::move(result.record));
  }

  ProbDist final_policy = softmax(z);
  return SimResult{std::move(records), std::move(z),
                   std::move(final_policy)};
}

SweepTable sweep_sensitivity(const SweepGrid& grid) {
  if (grid.p_chosen.empty() || grid.collision.empty()) {
    throw std::invalid_argument("sweep_sensitivity: grid must be non-empty");
  }
  for (double pc : grid.p_chosen) {
    if (!std::isfinite(pc) || pc < 0.0 || pc > 1.0) {
      throw std::invalid_argument(
          "sweep_sensitivity: p_chosen values must lie in [0, 1]");
    }
  }
  for (double c : grid.collision) {
    if (!std::isfinite(c) || c < 0.0 || c > 1.0) {
      throw std::invalid_argument(
          "sweep_sensitivity: collision values must lie in [0, 1]");
    }
  }

  SweepTable table{grid, {}};
  table.cells.reserve(grid.p_chosen.size() * grid.collision.size());
  for (double pc : grid.p_chosen) {
    for (double c : grid.collision) {
      // C(P) >= P_c^2 for any real distribution; cells below that line do
      // not correspond to any policy.
      if (c + kRadicandSlack < pc * pc) {
        table.cells.emplace_back(std::nullopt);
      } else {
        table.cells.emplace_back(
            std::sqrt(detail::magnitude_radicand(pc, c)));
      }
    }
  }
  return table;
}

}  // namespace logitdyn::bandit
