#pragma once

#include <cmath>

namespace changcheck::detail {

// Neumaier-compensated accumulator; keeps 2^n-term sums accurate to a few
// ulps of the total regardless of n.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
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

}  // namespace changcheck::detail
