#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logitdyn/cli/commands.hpp"
#include "logitdyn/version.hpp"

int main(int argc, char** argv) {
  using namespace logitdyn;

  CLI::App app{
      "Softmax logit-update laboratory: simulate bandit runs, verify the "
      "update identities numerically, and export reference tables."};
  app.set_version_flag("--version", std::string(kToolName) + " " +
                                        std::string(kToolVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string traj_out;
  auto* simulate = app.add_subcommand(
      "simulate", "Run a bandit simulation and write a trajectory CSV");
  simulate
      ->add_option("--config", config_path,
                   "Config file (key = value lines) or a previously emitted "
                   "manifest JSON")
      ->required();
  simulate->add_option("--out", traj_out, "Trajectory CSV path")->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand(
      "verify", "Run numerical self-checks and report pass/fail per check");
  verify
      ->add_option("suite", suite,
                   "One of: gradients, magnitude, entropy, mc, all")
      ->check(CLI::IsMember({"gradients", "magnitude", "entropy", "mc",
                             "all"}));

  std::string tables_dir;
  auto* tables = app.add_subcommand(
      "tables", "Write the reference tables (update scalers, entropies)");
  tables->add_option("--out", tables_dir, "Output directory")->required();

  std::vector<double> pc_values;
  std::vector<double> collision_values;
  std::string sweep_out;
  auto* sweep = app.add_subcommand(
      "sweep", "Tabulate the sensitivity factor sqrt(1 - 2 p_c + C) over a "
               "(p_chosen, collision) grid");
  sweep
      ->add_option("--pc", pc_values,
                   "p_chosen grid values in [0, 1] (default 0, 0.1, ..., 1)")
      ->delimiter(',');
  sweep
      ->add_option("--collision", collision_values,
                   "collision grid values in [0, 1] (default 0, 0.1, ..., 1)")
      ->delimiter(',');
  sweep->add_option("--out", sweep_out, "Sweep CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitConfigError;
  }

  if (simulate->parsed()) {
    return cli::cmd_simulate(config_path, traj_out, std::cout);
  }
  if (verify->parsed()) {
    return cli::cmd_verify(suite, std::cout);
  }
  if (tables->parsed()) {
    return cli::cmd_tables(tables_dir, std::cout);
  }
  if (sweep->parsed()) {
    const bandit::SweepGrid defaults = cli::default_sweep_grid();
    if (pc_values.empty()) pc_values = defaults.p_chosen;
    if (collision_values.empty()) collision_values = defaults.collision;
    return cli::cmd_sweep(pc_values, collision_values, sweep_out, std::cout);
  }
  return cli::kExitConfigError;
}
