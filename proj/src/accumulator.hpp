#pragma once

#include <cmath>

namespace radgas {

// Neumaier compensated sum. Plain summation over 128^3 samples loses ~1e-12
// relative, which is the size of the tolerances the monitors work at.
class Accumulator {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace radgas
