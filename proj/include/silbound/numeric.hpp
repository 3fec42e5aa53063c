// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace silbound {

/// Neumaier-compensated running sum. Also supports subtraction, which the
/// streaming bound scan needs when moving entries from one side to the other.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  void add(double value) noexcept {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      comp_ += (sum_ - t) + value;
    } else {
      comp_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  void subtract(double value) noexcept { add(-value); }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace silbound
