#include "logitdyn/cli/commands.hpp"

#include <cfloat>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "logitdyn/cli/csv.hpp"
#include "logitdyn/cli/errors.hpp"
#include "logitdyn/cli/manifest.hpp"
#include "logitdyn/simplex.hpp"
#include "logitdyn/update.hpp"

namespace logitdyn::cli {

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << content;
  if (!out) {
    throw IoError("failed writing '" + path + "'");
  }
}

std::string fmt_sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

template <typename Fn>
int guarded(std::ostream& diag, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    diag << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const IoError& e) {
    diag << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::invalid_argument& e) {
    diag << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::out_of_range& e) {
    diag << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

}  // namespace

std::string trajectory_csv(const bandit::SimResult& result,
                           bool snapshot_logits, std::size_t arms) {
  std::ostringstream out;
  out << "step,chosen,advantage,p_chosen,collision,shannon,renyi2,"
         "update_norm";
  if (snapshot_logits) {
    for (std::size_t j = 0; j < arms; ++j) {
      out << ",z" << j;
    }
  }
  out << "\n";
  for (const auto& r : result.records) {
    out << r.step << ',' << r.chosen << ',' << format_value(r.advantage)
        << ',' << format_value(r.p_chosen) << ',' << format_value(r.collision)
        << ',' << format_value(r.shannon) << ',' << format_value(r.renyi2)
        << ',' << format_value(r.update_norm);
    if (snapshot_logits) {
      const Logits& z = r.logits_snapshot.value();
      for (std::size_t j = 0; j < arms; ++j) {
        out << ',' << format_value(z[j]);
      }
    }
    out << "\n";
  }
  return out.str();
}

TableSet render_tables() {
  TableSet tables;

  {
    std::ostringstream out;
    out << "p_chosen,update_scaler,direction_pos_a,direction_neg_a\n";
    for (double pc : {0.1, 0.5, 0.9}) {
      const ProbDist p({pc, 1.0 - pc});
      const double scaler = score_vector(p, 0)[0];
      out << format_value(pc) << ',' << format_value(scaler) << ','
          << (scaler > 0.0 ? "up" : "down") << ','
          << (scaler > 0.0 ? "down" : "up") << "\n";
    }
    tables.chosen_action = out.str();
  }

  {
    std::ostringstream out;
    out << "p_other,update_scaler,direction_pos_a,direction_neg_a\n";
    for (double po : {0.1, 0.5, 0.8}) {
      const ProbDist p({1.0 - po, po});
      const double scaler = score_vector(p, 0)[1];
      out << format_value(po) << ',' << format_value(scaler) << ','
          << (scaler > 0.0 ? "up" : "down") << ','
          << (scaler > 0.0 ? "down" : "up") << "\n";
    }
    tables.other_actions = out.str();
  }

  {
    std::ostringstream out;
    out << "distribution,parameter,collision,renyi2,shannon\n";
    auto row = [&](const std::string& name, double parameter,
                   const ProbDist& p) {
      const EntropyReport rep = entropy_report(p);
      out << name << ',' << format_value(parameter) << ','
          << format_value(rep.collision) << ',' << format_value(rep.renyi2)
          << ',' << format_value(rep.shannon) << "\n";
    };
    for (std::size_t n : {2, 3, 4, 5, 10}) {
      row("uniform", static_cast<double>(n), ProbDist::uniform(n));
    }
    for (double p : {0.9, 0.75, 0.6}) {
      row("two_point", p, ProbDist({p, 1.0 - p}));
    }
    row("near_deterministic", 0.98, ProbDist({0.98, 0.01, 0.01}));
    tables.entropy_measures = out.str();
  }

  return tables;
}

std::string sweep_csv(const bandit::SweepTable& table) {
  std::ostringstream out;
  out << "p_chosen,collision,sensitivity\n";
  for (std::size_t i = 0; i < table.grid.p_chosen.size(); ++i) {
    for (std::size_t j = 0; j < table.grid.collision.size(); ++j) {
      out << format_value(table.grid.p_chosen[i]) << ','
          << format_value(table.grid.collision[j]) << ',';
      const auto& cell = table.at(i, j);
      if (cell.has_value()) {
        out << format_value(*cell);
      } else {
        out << "infeasible";
      }
      out << "\n";
    }
  }
  return out.str();
}

bandit::SweepGrid default_sweep_grid() {
  bandit::SweepGrid grid;
  for (int i = 0; i <= 10; ++i) {
    grid.p_chosen.push_back(static_cast<double>(i) / 10.0);
    grid.collision.push_back(static_cast<double>(i) / 10.0);
  }
  return grid;
}

int cmd_simulate(const std::string& config_path, const std::string& out_path,
                 std::ostream& diag) {
  return guarded(diag, [&] {
    const RunConfig cfg = load_config(config_path);
    const bandit::BanditEnv env = cfg.make_env();
    const bandit::SimConfig sim = cfg.make_sim_config();
    const bandit::SimResult result = bandit::run(env, sim);

    write_file(out_path, trajectory_csv(result, cfg.snapshot_logits,
                                        cfg.arms));

    RunManifest manifest;
    manifest.command = "simulate";
    manifest.resolved_config = config_to_json(cfg);
    manifest.seed = cfg.seed;
    manifest.outputs = {out_path};
    const std::string manifest_path = manifest_path_for(out_path);
    manifest.write(manifest_path);

    diag << "wrote " << out_path << " (" << cfg.steps << " steps, "
         << cfg.arms << " arms)\n";
    diag << "wrote " << manifest_path << "\n";
    diag << "final policy:";
    for (std::size_t j = 0; j < result.final_policy.size(); ++j) {
      diag << ' ' << format_value(result.final_policy[j]);
    }
    diag << "\n";
    return kExitOk;
  });
}

int cmd_verify(const std::string& suite, std::ostream& out) {
  return guarded(out, [&] {
    const std::vector<CheckResult> results = run_verify_suite(suite);
    std::size_t passed = 0;
    for (const auto& r : results) {
      out << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(26)
          << r.name << " max_err=" << std::setw(10) << fmt_sci(r.max_err)
          << " threshold=" << fmt_sci(r.threshold);
      if (!r.detail.empty()) {
        out << "  (" << r.detail << ")";
      }
      out << "\n";
      if (!r.pass && !r.failing_instance.empty()) {
        out << "       failing instance: " << r.failing_instance << "\n";
      }
      if (r.pass) ++passed;
    }
    out << "verify " << suite << ": " << passed << "/" << results.size()
        << " checks passed\n";
    return passed == results.size() ? kExitOk : kExitCheckFailed;
  });
}

int cmd_tables(const std::string& out_dir, std::ostream& diag) {
  return guarded(diag, [&] {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
      throw IoError("cannot create directory '" + out_dir +
                    "': " + ec.message());
    }

    const TableSet tables = render_tables();
    const auto path_of = [&](const std::string& name) {
      return (fs::path(out_dir) / name).string();
    };

    const std::string chosen = path_of("chosen_action.csv");
    const std::string other = path_of("other_actions.csv");
    const std::string entropy = path_of("entropy_measures.csv");
    write_file(chosen, tables.chosen_action);
    write_file(other, tables.other_actions);
    write_file(entropy, tables.entropy_measures);

    RunManifest manifest;
    manifest.command = "tables";
    manifest.resolved_config = nlohmann::json::object();
    manifest.seed = 0;
    manifest.outputs = {chosen, other, entropy};
    const std::string manifest_path = path_of("tables.manifest.json");
    manifest.write(manifest_path);

    for (const auto& p : manifest.outputs) {
      diag << "wrote " << p << "\n";
    }
    diag << "wrote " << manifest_path << "\n";
    return kExitOk;
  });
}

int cmd_sweep(const std::vector<double>& p_chosen,
              const std::vector<double>& collision,
              const std::string& out_path, std::ostream& diag) {
  return guarded(diag, [&] {
    if (p_chosen.empty() || collision.empty()) {
      throw ConfigError("sweep: --pc and --collision need at least one value");
    }
    bandit::SweepGrid grid{p_chosen, collision};
    const bandit::SweepTable table = bandit::sweep_sensitivity(grid);
    write_file(out_path, sweep_csv(table));

    RunManifest manifest;
    manifest.command = "sweep";
    manifest.resolved_config = {{"p_chosen", p_chosen},
                                {"collision", collision}};
    manifest.seed = 0;
    manifest.outputs = {out_path};
    const std::string manifest_path = manifest_path_for(out_path);
    manifest.write(manifest_path);

    diag << "wrote " << out_path << " (" << p_chosen.size() << " x "
         << collision.size() << " grid)\n";
    diag << "wrote " << manifest_path << "\n";
    return kExitOk;
  });
}

}  // namespace logitdyn::cli
