#include "logitdyn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "logitdyn/numeric.hpp"

namespace logitdyn::oracle {

namespace {

void check_step(double step) {
  if (!(step > 0.0)) {
    throw std::invalid_argument("finite_diff_score: step must be > 0");
  }
  if (step > kMaxFiniteDiffStep) {
    throw std::invalid_argument("finite_diff_score: step must be <= 1e-2");
  }
}

// log softmax for every action: z_i - logsumexp(z). This is the independent
// evaluation path the finite differences are built on.
std::vector<double> log_softmax_values(const std::vector<double>& z) {
  const double top = *std::max_element(z.begin(), z.end());
  NeumaierSum acc;
  for (double v : z) acc.add(std::exp(v - top));
  const double lse = top + std::log(acc.value());
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    out[i] = z[i] - lse;
  }
  return out;
}

}  // namespace

std::vector<double> finite_diff_score(const Logits& z, std::size_t i,
                                      double step) {
  check_step(step);
  if (i >= z.size()) {
    throw std::out_of_range("finite_diff_score: action index " +
                            std::to_string(i) + " out of range for " +
                            std::to_string(z.size()) + " actions");
  }
  std::vector<double> plus = z.values();
  std::vector<double> minus = z.values();
  std::vector<double> out(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    plus[j] += step;
    minus[j] -= step;
    const double lp_plus = log_softmax_values(plus)[i];
    const double lp_minus = log_softmax_values(minus)[i];
    out[j] = (lp_plus - lp_minus) / (2.0 * step);
    plus[j] = z[j];
    minus[j] = z[j];
  }
  return out;
}

GradCheckReport grad_check(std::size_t n_actions, std::size_t num_vectors,
                           double step, Rng& rng) {
  check_step(step);
  if (n_actions < 2) {
    throw std::invalid_argument("grad_check: need at least 2 actions");
  }
  GradCheckReport report;
  report.step_size = step;

  std::vector<double> z(n_actions);
  std::vector<double> perturbed(n_actions);
  // lp_plus[j] / lp_minus[j] hold log softmax of z with z_j nudged.
  std::vector<std::vector<double>> lp_plus(n_actions);
  std::vector<std::vector<double>> lp_minus(n_actions);

  for (std::size_t v = 0; v < num_vectors; ++v) {
    for (double& x : z) x = 6.0 * uniform_unit(rng) - 3.0;
    const ProbDist p = softmax(Logits(z));

    perturbed = z;
    for (std::size_t j = 0; j < n_actions; ++j) {
      perturbed[j] = z[j] + step;
      lp_plus[j] = log_softmax_values(perturbed);
      perturbed[j] = z[j] - step;
      lp_minus[j] = log_softmax_values(perturbed);
      perturbed[j] = z[j];
    }

    for (std::size_t i = 0; i < n_actions; ++i) {
      const std::vector<double> analytic = score_vector(p, i);
      for (std::size_t j = 0; j < n_actions; ++j) {
        const double fd = (lp_plus[j][i] - lp_minus[j][i]) / (2.0 * step);
        const double err = std::abs(fd - analytic[j]);
        if (err > report.max_abs_err) {
          report.max_abs_err = err;
          report.worst_indices = {i, j};
        }
      }
    }
  }
  return report;
}

double brute_force_magnitude(const ProbDist& p, const Experience& e) {
  const UpdateVector u = update_vector(p, e);
  NeumaierSum acc;
  for (double d : u.deltas()) acc.add(d * d);
  return std::sqrt(acc.value());
}

double mc_collision_estimate(const ProbDist& p, std::uint64_t pairs,
                             std::uint64_t seed) {
  if (pairs == 0) {
    throw std::invalid_argument("mc_collision_estimate: pairs must be >= 1");
  }
  Rng rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t k = 0; k < pairs; ++k) {
    const std::size_t a = sample_index(p, rng);
    const std::size_t b = sample_index(p, rng);
    hits += (a == b) ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(pairs);
}

std::vector<double> renyi_limit_check(const ProbDist& p,
                                      const std::vector<double>& alphas) {
  const double shannon = shannon_entropy(p);
  std::vector<double> errs;
  errs.reserve(alphas.size());
  for (double alpha : alphas) {
    errs.push_back(std::abs(renyi_entropy(p, alpha) - shannon));
  }
  return errs;
}

bool entropy_ordering_check(const ProbDist& p) {
  const EntropyReport r = entropy_report(p);
  return r.renyi2 <= r.shannon + 1e-12 &&
         r.collision >= std::exp(-r.shannon) - 1e-12;
}

}  // namespace logitdyn::oracle
