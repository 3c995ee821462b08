#include "logitdyn/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "logitdyn/numeric.hpp"

namespace logitdyn {

Logits::Logits(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("Logits: need at least 2 actions, got " +
                                std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("Logits: entries must be finite");
    }
  }
}

Logits Logits::zeros(std::size_t n) {
  return Logits(std::vector<double>(n, 0.0));
}

ProbDist::ProbDist(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) {
    throw std::invalid_argument("ProbDist: need at least 2 actions, got " +
                                std::to_string(probs_.size()));
  }
  for (double p : probs_) {
    if (!std::isfinite(p)) {
      throw std::invalid_argument("ProbDist: entries must be finite");
    }
    if (p < 0.0) {
      throw std::invalid_argument("ProbDist: entries must be non-negative");
    }
  }
  const double sum = accurate_sum(probs_);
  if (std::abs(sum - 1.0) > kSimplexRenormLimit) {
    throw std::invalid_argument("ProbDist: entries sum to " +
                                std::to_string(sum) +
                                ", outside the renormalization range");
  }
  if (sum != 1.0) {
    for (double& p : probs_) p /= sum;
  }
}

ProbDist ProbDist::uniform(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("ProbDist: need at least 2 actions, got " +
                                std::to_string(n));
  }
  return ProbDist(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbDist softmax(const Logits& z) {
  const std::vector<double>& v = z.values();
  const double top = *std::max_element(v.begin(), v.end());
  std::vector<double> e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    e[i] = std::exp(v[i] - top);
  }
  const double sum = accurate_sum(e);
  for (double& x : e) x /= sum;
  return ProbDist(std::move(e));
}

double collision_probability(const ProbDist& p) {
  NeumaierSum acc;
  for (double q : p.probs()) acc.add(q * q);
  return acc.value();
}

double renyi_entropy(const ProbDist& p, double alpha) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("renyi_entropy: alpha must be > 0");
  }
  if (std::abs(alpha - 1.0) <= kRenyiAlphaGuard) {
    throw std::invalid_argument(
        "renyi_entropy: alpha within 1e-9 of 1; use shannon_entropy for the "
        "limit");
  }
  NeumaierSum acc;
  for (double q : p.probs()) {
    if (q > 0.0) acc.add(std::pow(q, alpha));
  }
  const double h = std::log(acc.value()) / (1.0 - alpha);
  return h == 0.0 ? 0.0 : h;  // avoid -0 for degenerate distributions
}

double shannon_entropy(const ProbDist& p) {
  NeumaierSum acc;
  for (double q : p.probs()) {
    if (q > 0.0) acc.add(q * std::log(q));  // 0 ln 0 := 0
  }
  const double h = -acc.value();
  return h == 0.0 ? 0.0 : h;
}

EntropyReport entropy_report(const ProbDist& p) {
  return EntropyReport{
      .collision = collision_probability(p),
      .renyi2 = renyi_entropy(p, 2.0),
      .shannon = shannon_entropy(p),
  };
}

}  // namespace logitdyn
