#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "logitdyn/bandit.hpp"
#include "logitdyn/numeric.hpp"
#include "logitdyn/simplex.hpp"
#include "logitdyn/update.hpp"

using namespace logitdyn;
using namespace logitdyn::bandit;

TEST_CASE("BanditEnv and SimConfig validation") {
  CHECK_THROWS_AS(BanditEnv({1.0}, 0.0, AdvantageMode::kExact),
                  std::invalid_argument);
  CHECK_THROWS_AS(BanditEnv({1.0, 0.0}, -0.5, AdvantageMode::kExact),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      BanditEnv({1.0, std::numeric_limits<double>::quiet_NaN()}, 0.0,
                AdvantageMode::kExact),
      std::invalid_argument);

  const BanditEnv env({1.0, 0.0, -1.0}, 0.25, AdvantageMode::kSampledReward);
  CHECK(env.arms() == 3);

  SimConfig cfg;
  CHECK_NOTHROW(cfg.validate(3));
  cfg.steps = 0;
  CHECK_THROWS_AS(cfg.validate(3), std::invalid_argument);
  cfg.steps = 10;
  cfg.learning_rate = 0.0;
  CHECK_THROWS_AS(cfg.validate(3), std::invalid_argument);
  cfg.learning_rate = 0.1;
  cfg.initial_logits = Logits::zeros(2);
  CHECK_THROWS_AS(cfg.validate(3), std::invalid_argument);
  cfg.initial_logits = Logits::zeros(3);
  CHECK_NOTHROW(cfg.validate(3));
}

TEST_CASE("exact mode emits the fixed advantage for each arm") {
  const BanditEnv env({1.0, 0.0}, 0.0, AdvantageMode::kExact);
  SimConfig cfg;
  cfg.steps = 50;
  cfg.seed = 3;
  const SimResult res = run(env, cfg);

  REQUIRE(res.records.size() == 50);
  CHECK(res.records.front().step == 0);
  CHECK(res.records.back().step == 49);
  CHECK(res.records.front().p_chosen == 0.5);  // all-zero start is uniform
  for (const auto& r : res.records) {
    CHECK(r.advantage == (r.chosen == 0 ? 0.5 : -0.5));
    CHECK_FALSE(r.logits_snapshot.has_value());
  }
}

TEST_CASE("records snapshot the pre-update policy and its statistics") {
  const BanditEnv env({1.0, 0.5, 0.0}, 0.0, AdvantageMode::kExact);
  SimConfig cfg;
  cfg.steps = 25;
  cfg.seed = 12;
  cfg.learning_rate = 0.2;
  cfg.snapshot_logits = true;
  const SimResult res = run(env, cfg);

  REQUIRE(res.records.size() == 25);
  CHECK((*res.records.front().logits_snapshot)[0] == 0.0);

  for (const auto& r : res.records) {
    REQUIRE(r.logits_snapshot.has_value());
    const ProbDist policy = softmax(*r.logits_snapshot);
    CHECK(policy[r.chosen] == r.p_chosen);

    const EntropyReport er = entropy_report(policy);
    CHECK(er.collision == r.collision);
    CHECK(er.shannon == r.shannon);
    CHECK(er.renyi2 == r.renyi2);

    const double closed =
        0.2 * std::abs(r.advantage) * sensitivity_factor(policy, r.chosen);
    CHECK(std::abs(r.update_norm - closed) <= 1e-10 * std::max(1.0, closed));
  }
}

TEST_CASE("one forced step reproduces the hand-computed update") {
  // seed 0 makes the first uniform draw 0.1598 < 0.5, so arm 0 is chosen
  // from the uniform start
  const BanditEnv env({1.0, 0.0}, 0.0, AdvantageMode::kExact);
  SimConfig cfg;
  cfg.steps = 1;
  cfg.learning_rate = 0.1;
  cfg.seed = 0;
  const SimResult res = run(env, cfg);

  const TrajectoryRecord& r = res.records.at(0);
  REQUIRE(r.chosen == 0);
  CHECK(r.advantage == 0.5);
  CHECK(r.p_chosen == 0.5);
  CHECK(r.collision == 0.5);
  CHECK(std::abs(r.update_norm - 0.035355339059327376) <= 1e-15);

  CHECK(res.final_logits[0] == 0.025);
  CHECK(res.final_logits[1] == -0.025);
  CHECK(std::abs(res.final_policy[0] - 0.5124973964842103) <= 1e-15);
}

TEST_CASE("equal arm means give zero advantages and frozen logits") {
  const BanditEnv env({0.5, 0.5, 0.5}, 0.0, AdvantageMode::kExact);
  SimConfig cfg;
  cfg.steps = 200;
  cfg.seed = 9;
  const SimResult res = run(env, cfg);
  for (const auto& r : res.records) {
    CHECK(r.advantage == 0.0);
    CHECK(r.update_norm == 0.0);
  }
  for (std::size_t j = 0; j < res.final_logits.size(); ++j) {
    CHECK(res.final_logits[j] == 0.0);
  }
}

TEST_CASE("custom initial logits shape the first policy") {
  const BanditEnv env({1.0, 0.0}, 0.0, AdvantageMode::kExact);
  SimConfig cfg;
  cfg.steps = 1;
  cfg.initial_logits = Logits({2.0, 0.0});
  const SimResult res = run(env, cfg);
  const ProbDist expected = softmax(Logits({2.0, 0.0}));
  CHECK(res.records[0].p_chosen == expected[res.records[0].chosen]);
}

TEST_CASE("identical seeds reproduce runs; different seeds diverge") {
  const BanditEnv env({0.4, 0.0, -0.4}, 0.0, AdvantageMode::kExact);
  SimConfig cfg;
  cfg.steps = 200;
  cfg.seed = 77;

  const SimResult a = run(env, cfg);
  const SimResult b = run(env, cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t t = 0; t < a.records.size(); ++t) {
    CHECK(a.records[t].chosen == b.records[t].chosen);
    CHECK(a.records[t].advantage == b.records[t].advantage);
    CHECK(a.records[t].update_norm == b.records[t].update_norm);
  }
  for (std::size_t j = 0; j < a.final_logits.size(); ++j) {
    CHECK(a.final_logits[j] == b.final_logits[j]);
  }

  cfg.seed = 78;
  const SimResult c = run(env, cfg);
  bool any_diff = false;
  for (std::size_t t = 0; t < a.records.size(); ++t) {
    if (a.records[t].chosen != c.records[t].chosen) any_diff = true;
  }
  CHECK(any_diff);
}

TEST_CASE("sampled-reward advantages follow the configured baseline") {
  const BanditEnv env({1.0, 0.0}, 0.0, AdvantageMode::kSampledReward);

  SimConfig cfg;
  cfg.steps = 100;
  cfg.seed = 21;
  cfg.baseline = BaselineMode::kRunningMean;
  const SimResult centered = run(env, cfg);
  double mean = 0.0;
  std::size_t count = 0;
  for (const auto& r : centered.records) {
    const double reward = env.arm_means[r.chosen];  // noise_std = 0
    CHECK(r.advantage == reward - mean);
    ++count;
    mean += (reward - mean) / static_cast<double>(count);
  }

  cfg.baseline = BaselineMode::kNone;
  for (const auto& r : run(env, cfg).records) {
    CHECK(r.advantage == env.arm_means[r.chosen]);
  }

  const BanditEnv noisy({1.0, 0.0}, 0.5, AdvantageMode::kSampledReward);
  bool off_mean = false;
  for (const auto& r : run(noisy, cfg).records) {
    CHECK(std::isfinite(r.advantage));
    if (r.advantage != 1.0 && r.advantage != 0.0) off_mean = true;
  }
  CHECK(off_mean);
}

TEST_CASE("two-arm exact run concentrates on the better arm") {
  const BanditEnv env({1.0, 0.0}, 0.0, AdvantageMode::kExact);
  SimConfig cfg;
  cfg.steps = 2000;
  cfg.learning_rate = 0.1;
  cfg.seed = 7;
  const SimResult res = run(env, cfg);

  CHECK(res.final_policy[0] >= 0.99);
  CHECK(res.records.back().update_norm <= 0.01 * cfg.learning_rate);
  CHECK(res.records.back().collision >= 0.98);

  // as the policy concentrates, entropies fall toward zero
  CHECK(res.records.back().shannon < 0.1);
  CHECK(res.records.back().shannon < res.records.front().shannon);

  // exploration gives way to exploitation on best-arm steps: the last 10%
  // of their norms all sit below the median of the first 10%. (Steps that
  // pick the now-rare arm still produce large "surprise" updates, so they
  // are excluded.)
  std::vector<double> best_norms;
  for (const auto& r : res.records) {
    if (r.chosen == 0) best_norms.push_back(r.update_norm);
  }
  const std::size_t tenth = best_norms.size() / 10;
  REQUIRE(tenth > 0);
  std::vector<double> head(best_norms.begin(), best_norms.begin() + tenth);
  std::nth_element(head.begin(), head.begin() + head.size() / 2, head.end());
  const double head_median = head[head.size() / 2];
  for (std::size_t k = best_norms.size() - tenth; k < best_norms.size();
       ++k) {
    CHECK(best_norms[k] < head_median);
  }
}

TEST_CASE("the best arm's probability never drops on steps that choose it") {
  const BanditEnv env({1.0, 0.0}, 0.0, AdvantageMode::kExact);
  SimConfig cfg;
  cfg.steps = 300;
  cfg.seed = 19;
  cfg.snapshot_logits = true;
  const SimResult res = run(env, cfg);

  for (std::size_t t = 0; t < res.records.size(); ++t) {
    if (res.records[t].chosen != 0) continue;
    const double before = softmax(*res.records[t].logits_snapshot)[0];
    const double after =
        t + 1 < res.records.size()
            ? softmax(*res.records[t + 1].logits_snapshot)[0]
            : res.final_policy[0];
    CHECK(after > before);
  }
}

TEST_CASE("the logit sum stays near zero over a hundred thousand steps") {
  const BanditEnv env({0.3, -0.2, 0.1}, 0.0, AdvantageMode::kExact);
  SimConfig cfg;
  cfg.steps = 100000;
  cfg.learning_rate = 0.05;
  cfg.seed = 13;
  const SimResult res = run(env, cfg);
  CHECK(std::abs(logitdyn::accurate_sum(res.final_logits.values())) <= 1e-9);
}

TEST_CASE("RunningMean tracks the mean incrementally") {
  RunningMean m;
  CHECK(m.mean() == 0.0);
  CHECK(m.count() == 0);
  m.add(1.0);
  m.add(2.0);
  m.add(3.0);
  CHECK(m.count() == 3);
  CHECK(std::abs(m.mean() - 2.0) <= 1e-15);
}

TEST_CASE("sweep table marks infeasible cells and fills feasible ones") {
  const SweepTable t = sweep_sensitivity(
      SweepGrid{{0.0, 0.5, 0.9, 1.0}, {0.0, 0.01, 0.3, 0.82, 1.0}});

  REQUIRE(t.cells.size() == 20);
  CHECK(std::abs(*t.at(0, 0) - 1.0) <= 1e-15);
  CHECK(std::abs(*t.at(0, 4) - 1.4142135623730951) <= 1e-15);
  CHECK_FALSE(t.at(1, 1).has_value());
  CHECK(std::abs(*t.at(1, 2) - 0.5477225575051661) <= 1e-15);
  CHECK(std::abs(*t.at(2, 3) - 0.1414213562373095) <= 1e-15);
  CHECK_FALSE(t.at(3, 2).has_value());
  REQUIRE(t.at(3, 4).has_value());
  CHECK(*t.at(3, 4) == 0.0);

  // the two-action uniform point (p_c = 0.5, C = 0.5) sits on the grid
  const SweepTable mid = sweep_sensitivity(SweepGrid{{0.5}, {0.5}});
  CHECK(std::abs(*mid.at(0, 0) - 0.7071067811865476) <= 1e-15);

  // C exactly at the p_c^2 floor stays feasible despite round-off
  const SweepTable edge = sweep_sensitivity(SweepGrid{{0.1}, {0.01}});
  REQUIRE(edge.at(0, 0).has_value());
  CHECK(std::abs(*edge.at(0, 0) - 0.9) <= 1e-15);

  CHECK_THROWS_AS(sweep_sensitivity(SweepGrid{{-0.1}, {0.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep_sensitivity(SweepGrid{{0.5}, {1.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sweep_sensitivity(SweepGrid{{}, {0.5}}),
                  std::invalid_argument);
}
