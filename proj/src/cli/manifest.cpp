#include "logitdyn/cli/manifest.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "logitdyn/version.hpp"

namespace logitdyn::cli {

nlohmann::json config_to_json(const RunConfig& cfg) {
  nlohmann::json j;
  j["arms"] = cfg.arms;
  j["means"] = cfg.means;
  j["noise_std"] = cfg.noise_std;
  j["mode"] = cfg.mode;
  j["steps"] = cfg.steps;
  j["eta"] = cfg.eta;
  j["seed"] = cfg.seed;
  j["baseline"] = cfg.baseline;
  j["snapshot_logits"] = cfg.snapshot_logits;
  return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig cfg;
  try {
    cfg.arms = j.at("arms").get<std::size_t>();
    cfg.means = j.at("means").get<std::vector<double>>();
    cfg.noise_std = j.at("noise_std").get<double>();
    cfg.mode = j.at("mode").get<std::string>();
    cfg.steps = j.at("steps").get<std::uint64_t>();
    cfg.eta = j.at("eta").get<double>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.baseline = j.at("baseline").get<std::string>();
    cfg.snapshot_logits = j.at("snapshot_logits").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: bad resolved_config: ") + e.what());
  }
  validate_config(cfg);
  return cfg;
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["outputs"] = outputs;
  j["resolved_config"] = resolved_config;
  j["rng"] = std::string(kRngAlgorithm);
  j["seed"] = seed;
  j["tool"] = std::string(kToolName);
  j["version"] = std::string(kToolVersion);
  return j;
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
  RunManifest m;
  try {
    m.command = j.at("command").get<std::string>();
    m.outputs = j.at("outputs").get<std::vector<std::string>>();
    m.resolved_config = j.at("resolved_config");
    m.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("manifest: missing field: ") + e.what());
  }
  return m;
}

void RunManifest::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << to_json().dump(2) << "\n";
  if (!out) {
    throw IoError("failed writing '" + path + "'");
  }
}

RunManifest RunManifest::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("manifest: invalid JSON in '" + path + "': " + e.what());
  }
  return from_json(j);
}

std::string manifest_path_for(const std::string& output_path) {
  return output_path + ".manifest.json";
}

}  // namespace logitdyn::cli
