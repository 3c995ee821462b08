#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "logitdyn/cli/commands.hpp"
#include "logitdyn/numeric.hpp"
#include "logitdyn/oracle.hpp"
#include "logitdyn/random.hpp"
#include "logitdyn/simplex.hpp"
#include "logitdyn/update.hpp"

namespace logitdyn::cli {

namespace {

// Fixed suite seeds so every `verify` run checks the exact same instances.
constexpr std::uint64_t kGradSeed = 0x6c6f676974647931ULL;
constexpr std::uint64_t kMagnitudeSeed = 0x6c6f676974647932ULL;
constexpr std::uint64_t kEntropySeed = 0x6c6f676974647933ULL;
constexpr std::uint64_t kMcSeed = 0x6c6f676974647934ULL;

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), DBL_MIN});
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

std::vector<CheckResult> gradients_suite() {
  std::vector<CheckResult> results;
  constexpr double kStep = 1e-5;
  constexpr double kThreshold = 1e-6;
  constexpr std::size_t kVectors = 100;
  for (std::size_t n : {2, 3, 10, 100}) {
    Rng rng(kGradSeed + n);
    const oracle::GradCheckReport report =
        oracle::grad_check(n, kVectors, kStep, rng);
    CheckResult r;
    r.name = "gradients/n=" + std::to_string(n);
    r.max_err = report.max_abs_err;
    r.threshold = kThreshold;
    r.pass = report.max_abs_err <= kThreshold;
    r.detail = std::to_string(kVectors) + " vectors, central diff step " +
               fmt(kStep);
    if (!r.pass) {
      std::ostringstream js;
      js << "{\"n\": " << n << ", \"worst_i\": "
         << report.worst_indices.first
         << ", \"worst_j\": " << report.worst_indices.second << "}";
      r.failing_instance = js.str();
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<CheckResult> magnitude_suite() {
  std::vector<CheckResult> results;
  constexpr std::size_t kCases = 10000;
  Rng rng(kMagnitudeSeed);

  CheckResult conservation;
  conservation.name = "magnitude/conservation";
  conservation.threshold = kConservationTolerance;
  conservation.detail = std::to_string(kCases) +
                        " random updates, n in [2, 16], relative to the "
                        "largest delta";

  CheckResult closed_form;
  closed_form.name = "magnitude/closed-form";
  closed_form.threshold = 1e-10;
  closed_form.detail = std::to_string(kCases) +
                       " random updates, summed squares vs closed form";

  std::string worst_case_conservation;
  std::string worst_case_closed;
  for (std::size_t k = 0; k < kCases; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 15);
    const ProbDist p = random_simplex(n, rng);
    const std::size_t chosen = static_cast<std::size_t>(rng() % n);
    const double advantage = (uniform_unit(rng) - 0.5) * 20.0;
    const double eta = uniform_unit(rng) * 0.999 + 0.001;
    const Experience e(chosen, advantage, eta);

    const UpdateVector u = update_vector(p, e);
    double max_abs = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
      max_abs = std::max(max_abs, std::abs(u[j]));
    }
    const double sum_err = std::abs(accurate_sum(u.deltas())) /
                           std::max(1.0, max_abs);
    if (sum_err > conservation.max_err) {
      conservation.max_err = sum_err;
      worst_case_conservation =
          "{\"n\": " + std::to_string(n) + ", \"case\": " +
          std::to_string(k) + "}";
    }

    const double err =
        rel_diff(oracle::brute_force_magnitude(p, e), update_magnitude(p, e));
    if (err > closed_form.max_err) {
      closed_form.max_err = err;
      worst_case_closed = "{\"n\": " + std::to_string(n) + ", \"case\": " +
                          std::to_string(k) + "}";
    }
  }
  conservation.pass = conservation.max_err <= conservation.threshold;
  if (!conservation.pass) {
    conservation.failing_instance = worst_case_conservation;
  }
  closed_form.pass = closed_form.max_err <= closed_form.threshold;
  if (!closed_form.pass) closed_form.failing_instance = worst_case_closed;

  results.push_back(std::move(conservation));
  results.push_back(std::move(closed_form));
  return results;
}

std::vector<CheckResult> entropy_suite() {
  std::vector<CheckResult> results;
  Rng rng(kEntropySeed);

  {
    CheckResult r;
    r.name = "entropy/bounds";
    r.threshold = 1e-12;
    constexpr std::size_t kCases = 10000;
    r.detail = std::to_string(kCases) +
               " random distributions, n in [2, 1000]";
    std::string worst;
    for (std::size_t k = 0; k < kCases; ++k) {
      const std::size_t n = 2 + static_cast<std::size_t>(rng() % 999);
      const ProbDist p = random_simplex(n, rng);
      const EntropyReport rep = entropy_report(p);
      const double ln_n = std::log(static_cast<double>(n));
      const double violation = std::max(
          {0.0, 1.0 / static_cast<double>(n) - rep.collision,
           rep.collision - 1.0, -rep.shannon, rep.shannon - ln_n,
           rep.renyi2 - rep.shannon,
           std::exp(-rep.shannon) - rep.collision});
      if (violation > r.max_err) {
        r.max_err = violation;
        worst = "{\"n\": " + std::to_string(n) + ", \"case\": " +
                std::to_string(k) + "}";
      }
      if (!oracle::entropy_ordering_check(p)) {
        r.max_err = std::max(r.max_err, 1.0);
        worst = "{\"n\": " + std::to_string(n) + ", \"case\": " +
                std::to_string(k) + "}";
      }
    }
    r.pass = r.max_err <= r.threshold;
    if (!r.pass) r.failing_instance = worst;
    results.push_back(std::move(r));
  }

  {
    CheckResult r;
    r.name = "entropy/uniform-equality";
    r.threshold = 1e-12;
    r.detail = "C = 1/n and H2 = H = ln n at uniform, n in {2,3,10,100,1000}";
    for (std::size_t n : {2, 3, 10, 100, 1000}) {
      const EntropyReport rep = entropy_report(ProbDist::uniform(n));
      const double ln_n = std::log(static_cast<double>(n));
      const double err = std::max(
          {std::abs(rep.collision - 1.0 / static_cast<double>(n)),
           std::abs(rep.renyi2 - ln_n), std::abs(rep.shannon - ln_n)});
      if (err > r.max_err) {
        r.max_err = err;
        if (err > r.threshold) {
          r.failing_instance = "{\"n\": " + std::to_string(n) + "}";
        }
      }
    }
    r.pass = r.max_err <= r.threshold;
    results.push_back(std::move(r));
  }

  {
    CheckResult r;
    r.name = "entropy/renyi-limit";
    r.threshold = 1e-3;
    const ProbDist p({0.5, 0.25, 0.25});
    const std::vector<double> alphas = {1.5, 1.1, 1.01, 1.001};
    const std::vector<double> errs = oracle::renyi_limit_check(p, alphas);
    bool decreasing = true;
    for (std::size_t k = 1; k < errs.size(); ++k) {
      if (!(errs[k] < errs[k - 1])) decreasing = false;
    }
    r.max_err = errs.back();
    r.pass = decreasing && errs.back() <= r.threshold;
    std::ostringstream detail;
    detail << "|H_a - H| at a=1.5,1.1,1.01,1.001:";
    for (double e : errs) detail << ' ' << fmt(e);
    r.detail = detail.str();
    if (!r.pass) {
      r.failing_instance = "{\"p\": [0.5, 0.25, 0.25]}";
    }
    results.push_back(std::move(r));
  }

  {
    CheckResult r;
    r.name = "entropy/alpha-monotone";
    r.threshold = 1e-10;
    constexpr std::size_t kCases = 1000;
    r.detail = std::to_string(kCases) +
               " random distributions, H_a non-increasing over "
               "a in {0.25, 0.5, 0.75, 1.5, 2, 4, 16}";
    const std::vector<double> alphas = {0.25, 0.5, 0.75, 1.5, 2.0, 4.0, 16.0};
    std::string worst;
    for (std::size_t k = 0; k < kCases; ++k) {
      const std::size_t n = 2 + static_cast<std::size_t>(rng() % 9);
      const ProbDist p = random_simplex(n, rng);
      double prev = renyi_entropy(p, alphas.front());
      for (std::size_t a = 1; a < alphas.size(); ++a) {
        const double cur = renyi_entropy(p, alphas[a]);
        const double rise = cur - prev;
        if (rise > r.max_err) {
          r.max_err = rise;
          worst = "{\"n\": " + std::to_string(n) + ", \"alpha\": " +
                  fmt(alphas[a]) + ", \"case\": " + std::to_string(k) + "}";
        }
        prev = cur;
      }
    }
    r.pass = r.max_err <= r.threshold;
    if (!r.pass) r.failing_instance = worst;
    results.push_back(std::move(r));
  }

  return results;
}

std::vector<CheckResult> mc_suite() {
  std::vector<CheckResult> results;
  constexpr std::uint64_t kPairs = 1000000;

  {
    CheckResult r;
    r.name = "mc/deterministic";
    r.threshold = 0.0;
    r.detail = "P = (1, 0): every sampled pair collides";
    const double est =
        oracle::mc_collision_estimate(ProbDist({1.0, 0.0}), 10000, kMcSeed);
    r.max_err = std::abs(est - 1.0);
    r.pass = r.max_err <= r.threshold;
    results.push_back(std::move(r));
  }

  {
    CheckResult r;
    r.name = "mc/uniform-2";
    r.threshold = 0.002;
    r.detail = std::to_string(kPairs) + " pairs vs C = 0.5";
    const double est =
        oracle::mc_collision_estimate(ProbDist::uniform(2), kPairs, kMcSeed);
    r.max_err = std::abs(est - 0.5);
    r.pass = r.max_err <= r.threshold;
    results.push_back(std::move(r));
  }

  {
    CheckResult r;
    r.name = "mc/skewed-0.9-0.1";
    r.threshold = 0.002;
    r.detail = std::to_string(kPairs) + " pairs vs C = 0.82";
    const ProbDist p({0.9, 0.1});
    const double est = oracle::mc_collision_estimate(p, kPairs, kMcSeed + 1);
    r.max_err = std::abs(est - collision_probability(p));
    r.pass = r.max_err <= r.threshold;
    results.push_back(std::move(r));
  }

  {
    CheckResult r;
    r.name = "mc/seed-determinism";
    r.threshold = 0.0;
    r.detail = "same seed twice gives the identical estimate";
    const ProbDist p({0.6, 0.3, 0.1});
    const double a = oracle::mc_collision_estimate(p, 100000, kMcSeed + 2);
    const double b = oracle::mc_collision_estimate(p, 100000, kMcSeed + 2);
    r.max_err = std::abs(a - b);
    r.pass = r.max_err <= r.threshold;
    results.push_back(std::move(r));
  }

  return results;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const std::string& suite) {
  if (suite == "gradients") return gradients_suite();
  if (suite == "magnitude") return magnitude_suite();
  if (suite == "entropy") return entropy_suite();
  if (suite == "mc") return mc_suite();
  if (suite == "all") {
    std::vector<CheckResult> all = gradients_suite();
    for (auto&& block : {magnitude_suite(), entropy_suite(), mc_suite()}) {
      for (const auto& r : block) all.push_back(r);
    }
    return all;
  }
  throw std::invalid_argument(
      "unknown verify suite '" + suite +
      "' (expected gradients, magnitude, entropy, mc, or all)");
}

}  // namespace logitdyn::cli
