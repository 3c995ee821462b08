#pragma once

#include <cmath>
#include <span>

namespace logitdyn {

// Neumaier-compensated accumulator. Keeps summation error at O(eps)
// independent of the number of terms, so simplex and conservation checks
// measure the true sum rather than accumulation noise.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double accurate_sum(std::span<const double> xs) {
  NeumaierSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

}  // namespace logitdyn
