#include "logitdyn/update.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "logitdyn/numeric.hpp"

namespace logitdyn {

namespace {

void check_index(std::size_t chosen, std::size_t n, const char* who) {
  if (chosen >= n) {
    throw std::out_of_range(std::string(who) + ": chosen index " +
                            std::to_string(chosen) + " out of range for " +
                            std::to_string(n) + " actions");
  }
}

}  // namespace

Experience::Experience(std::size_t chosen, double advantage,
                       double learning_rate)
    : chosen(chosen), advantage(advantage), learning_rate(learning_rate) {
  if (!std::isfinite(advantage)) {
    throw std::invalid_argument("Experience: advantage must be finite");
  }
  if (!std::isfinite(learning_rate) || !(learning_rate > 0.0)) {
    throw std::invalid_argument("Experience: learning_rate must be > 0");
  }
}

UpdateVector::UpdateVector(std::vector<double> deltas)
    : deltas_(std::move(deltas)) {
  if (deltas_.size() < 2) {
    throw std::invalid_argument("UpdateVector: need at least 2 entries, got " +
                                std::to_string(deltas_.size()));
  }
  double max_abs = 0.0;
  for (double d : deltas_) {
    if (!std::isfinite(d)) {
      throw std::invalid_argument("UpdateVector: entries must be finite");
    }
    max_abs = std::max(max_abs, std::abs(d));
  }
  const double sum = accurate_sum(deltas_);
  if (std::abs(sum) > kConservationTolerance * std::max(1.0, max_abs)) {
    throw std::invalid_argument(
        "UpdateVector: entries must sum to zero (conservation), got " +
        std::to_string(sum));
  }
}

std::vector<double> score_vector(const ProbDist& p, std::size_t chosen) {
  check_index(chosen, p.size(), "score_vector");
  std::vector<double> score(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    score[j] = -p[j];
  }
  score[chosen] += 1.0;
  return score;
}

UpdateVector update_vector(const ProbDist& p, const Experience& e) {
  std::vector<double> deltas = score_vector(p, e.chosen);
  const double scale = e.learning_rate * e.advantage;
  for (double& d : deltas) d *= scale;
  return UpdateVector(std::move(deltas));
}

double update_magnitude(const ProbDist& p, const Experience& e) {
  return e.learning_rate * std::abs(e.advantage) *
         sensitivity_factor(p, e.chosen);
}

double sensitivity_factor(const ProbDist& p, std::size_t chosen) {
  check_index(chosen, p.size(), "sensitivity_factor");
  return std::sqrt(
      detail::magnitude_radicand(p[chosen], collision_probability(p)));
}

Logits apply_update(const Logits& z, const UpdateVector& u) {
  if (z.size() != u.size()) {
    throw std::invalid_argument("apply_update: shape mismatch, " +
                                std::to_string(z.size()) + " logits vs " +
                                std::to_string(u.size()) + " deltas");
  }
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    out[i] = z[i] + u[i];
  }
  return Logits(std::move(out));
}

namespace detail {

double magnitude_radicand(double p_chosen, double collision) {
  const double r = 1.0 - 2.0 * p_chosen + collision;
  if (r < 0.0) {
    if (r < -kRadicandSlack) {
      throw std::logic_error("magnitude_radicand: 1 - 2*P_c + C(P) = " +
                             std::to_string(r) +
                             " is negative beyond round-off");
    }
    return 0.0;
  }
  return r;
}

}  // namespace detail

}  // namespace logitdyn
