#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "logitdyn/cli/config.hpp"

namespace logitdyn::cli {

/// Reproduction record written next to every output file: the command, the
/// fully resolved configuration, the seed, the tool version, and the output
/// paths. Re-running the same command with the manifest as config yields
/// byte-identical outputs.
struct RunManifest {
  std::string command;
  nlohmann::json resolved_config;
  std::uint64_t seed = 0;
  std::vector<std::string> outputs;

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);

  void write(const std::string& path) const;
  static RunManifest load(const std::string& path);
};

nlohmann::json config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const nlohmann::json& j);

/// "<output>.manifest.json"
std::string manifest_path_for(const std::string& output_path);

}  // namespace logitdyn::cli
