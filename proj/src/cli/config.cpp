#include "logitdyn/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "logitdyn/cli/manifest.hpp"

namespace logitdyn::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

double parse_double(const std::string& field, const std::string& value) {
  const std::string v = trim(value);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError(field + ": expected a number, got '" + value + "'");
  }
  return out;
}

std::uint64_t parse_u64(const std::string& field, const std::string& value) {
  const std::string v = trim(value);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError(field + ": expected a non-negative integer, got '" +
                      value + "'");
  }
  return out;
}

bool parse_bool(const std::string& field, const std::string& value) {
  const std::string v = trim(value);
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError(field + ": expected true or false, got '" + value + "'");
}

std::vector<double> parse_double_list(const std::string& field,
                                      const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_double(field, item));
  }
  if (out.empty()) {
    throw ConfigError(field + ": expected a comma-separated list of numbers");
  }
  return out;
}

std::string canonical_mode(const std::string& value) {
  if (value == "exact" || value == "exact-advantage") return "exact-advantage";
  if (value == "sampled" || value == "sampled-reward") return "sampled-reward";
  throw ConfigError("mode: expected exact-advantage or sampled-reward, got '" +
                    value + "'");
}

std::string canonical_baseline(const std::string& value) {
  if (value == "none" || value == "running-mean") return value;
  throw ConfigError("baseline: expected none or running-mean, got '" + value +
                    "'");
}

const std::set<std::string> kKnownKeys = {
    "arms", "means", "noise_std", "mode",     "steps",
    "eta",  "seed",  "baseline",  "snapshot_logits"};

}  // namespace

void validate_config(const RunConfig& cfg) {
  if (cfg.means.empty()) {
    throw ConfigError("means: required");
  }
  if (cfg.arms < 2) {
    throw ConfigError("arms: need at least 2, got " +
                      std::to_string(cfg.arms));
  }
  if (cfg.means.size() != cfg.arms) {
    throw ConfigError("means: got " + std::to_string(cfg.means.size()) +
                      " values for arms = " + std::to_string(cfg.arms));
  }
  for (double m : cfg.means) {
    if (!std::isfinite(m)) {
      throw ConfigError("means: entries must be finite");
    }
  }
  if (!std::isfinite(cfg.noise_std) || cfg.noise_std < 0.0) {
    throw ConfigError("noise_std: must be >= 0");
  }
  if (cfg.mode != "exact-advantage" && cfg.mode != "sampled-reward") {
    throw ConfigError("mode: expected exact-advantage or sampled-reward");
  }
  if (cfg.steps < 1) {
    throw ConfigError("steps: must be >= 1");
  }
  if (!std::isfinite(cfg.eta) || !(cfg.eta > 0.0)) {
    throw ConfigError("eta: must be > 0");
  }
  if (cfg.baseline != "none" && cfg.baseline != "running-mean") {
    throw ConfigError("baseline: expected none or running-mean");
  }
}

RunConfig parse_config_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value, got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }
    if (!kKnownKeys.contains(key)) {
      throw ConfigError("unknown key '" + key + "'");
    }
    if (kv.contains(key)) {
      throw ConfigError("duplicate key '" + key + "'");
    }
    kv[key] = value;
  }

  RunConfig cfg;
  if (!kv.contains("means")) throw ConfigError("means: required");
  cfg.means = parse_double_list("means", kv.at("means"));
  cfg.arms = kv.contains("arms") ? static_cast<std::size_t>(
                                       parse_u64("arms", kv.at("arms")))
                                 : cfg.means.size();
  if (kv.contains("noise_std")) {
    cfg.noise_std = parse_double("noise_std", kv.at("noise_std"));
  }
  if (kv.contains("mode")) {
    cfg.mode = canonical_mode(trim(kv.at("mode")));
  }
  if (!kv.contains("steps")) throw ConfigError("steps: required");
  cfg.steps = parse_u64("steps", kv.at("steps"));
  if (!kv.contains("eta")) throw ConfigError("eta: required");
  cfg.eta = parse_double("eta", kv.at("eta"));
  if (kv.contains("seed")) {
    cfg.seed = parse_u64("seed", kv.at("seed"));
  }
  if (kv.contains("baseline")) {
    cfg.baseline = canonical_baseline(trim(kv.at("baseline")));
  }
  if (kv.contains("snapshot_logits")) {
    cfg.snapshot_logits = parse_bool("snapshot_logits",
                                     kv.at("snapshot_logits"));
  }

  validate_config(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config: cannot open '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  const std::size_t first =
      text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config: invalid manifest JSON in '" + path +
                        "': " + e.what());
    }
    if (!j.contains("resolved_config")) {
      throw ConfigError("config: manifest '" + path +
                        "' has no resolved_config");
    }
    return config_from_json(j.at("resolved_config"));
  }
  return parse_config_text(text);
}

bandit::BanditEnv RunConfig::make_env() const {
  const auto mode_enum = mode == "exact-advantage"
                             ? bandit::AdvantageMode::kExact
                             : bandit::AdvantageMode::kSampledReward;
  return bandit::BanditEnv(means, noise_std, mode_enum);
}

bandit::SimConfig RunConfig::make_sim_config() const {
  bandit::SimConfig sim;
  sim.steps = steps;
  sim.learning_rate = eta;
  sim.seed = seed;
  sim.baseline = baseline == "running-mean" ? bandit::BaselineMode::kRunningMean
                                            : bandit::BaselineMode::kNone;
  sim.snapshot_logits = snapshot_logits;
  return sim;
}

}  // namespace logitdyn::cli
