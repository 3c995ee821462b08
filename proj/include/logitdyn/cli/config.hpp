#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logitdyn/bandit.hpp"
#include "logitdyn/cli/errors.hpp"

namespace logitdyn::cli {

/// Flat simulation configuration, one key per line in the config file:
///
///   arms = 2                    # optional, defaults to len(means)
///   means = 1.0, 0.0
///   noise_std = 0.0
///   mode = exact-advantage      # or sampled-reward
///   steps = 2000
///   eta = 0.1
///   seed = 7
///   baseline = none             # or running-mean
///   snapshot_logits = false
///
/// '#' starts a comment; blank lines are ignored.
struct RunConfig {
  std::size_t arms = 0;
  std::vector<double> means;
  double noise_std = 0.0;
  std::string mode = "exact-advantage";
  std::uint64_t steps = 0;
  double eta = 0.0;
  std::uint64_t seed = 0;
  std::string baseline = "none";
  bool snapshot_logits = false;

  bandit::BanditEnv make_env() const;
  bandit::SimConfig make_sim_config() const;
};

/// Throws ConfigError naming the first invalid field.
void validate_config(const RunConfig& cfg);

RunConfig parse_config_text(const std::string& text);

/// Reads either a key = value config file or a previously emitted manifest
/// (detected by a leading '{'), so a manifest can be replayed directly.
RunConfig load_config(const std::string& path);

}  // namespace logitdyn::cli
