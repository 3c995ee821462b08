#pragma once

/**
 * Command implementations behind the `logitdyn` binary, exposed as library
 * functions so tests can drive them directly.
 *
 * Exit-code contract: 0 ok, 1 verification check failed, 2 invalid
 * config/arguments, 3 I/O failure.
 */

#include <iosfwd>
#include <string>
#include <vector>

#include "logitdyn/bandit.hpp"
#include "logitdyn/cli/config.hpp"

namespace logitdyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;

// ---------------------------------------------------------------------------
// Renderers (pure; commands write their output to disk)
// ---------------------------------------------------------------------------

/// Trajectory CSV: header
/// step,chosen,advantage,p_chosen,collision,shannon,renyi2,update_norm
/// plus z0..z{n-1} columns when snapshots were recorded.
std::string trajectory_csv(const bandit::SimResult& result,
                           bool snapshot_logits, std::size_t arms);

struct TableSet {
  std::string chosen_action;   // update scaler 1 - P_c and direction vs A sign
  std::string other_actions;   // update scaler -P_o and direction vs A sign
  std::string entropy_measures;  // C, H2, H for reference distributions
};

/// The three reference tables, computed from library calls.
TableSet render_tables();

std::string sweep_csv(const bandit::SweepTable& table);

/// 0, 0.1, ..., 1.0 on both axes.
bandit::SweepGrid default_sweep_grid();

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  double max_err = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;            // human-oriented context
  std::string failing_instance;  // JSON for replay; empty unless relevant
};

/// Runs one of {gradients, magnitude, entropy, mc, all} with fixed seeds.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_verify_suite(const std::string& suite);

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int cmd_simulate(const std::string& config_path, const std::string& out_path,
                 std::ostream& diag);
int cmd_verify(const std::string& suite, std::ostream& out);
int cmd_tables(const std::string& out_dir, std::ostream& diag);
int cmd_sweep(const std::vector<double>& p_chosen,
              const std::vector<double>& collision,
              const std::string& out_path, std::ostream& diag);

}  // namespace logitdyn::cli
