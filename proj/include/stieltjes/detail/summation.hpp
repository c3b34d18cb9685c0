#pragma once

#include <algorithm>
#include <cmath>

namespace stieltjes::detail {

// Neumaier-compensated running sum. Also records the largest magnitude seen
// among terms and partial sums, which callers use to diagnose cancellation.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      carry_ += (sum_ - t) + term;
    } else {
      carry_ += (term - t) + sum_;
    }
    sum_ = t;
    peak_ = std::max({peak_, std::abs(term), std::abs(sum_)});
    return *this;
  }

  CompensatedSum& operator-=(double term) { return *this += -term; }

  double value() const { return sum_ + carry_; }
  double peak() const { return peak_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
  double peak_ = 0.0;
};

}  // namespace stieltjes::detail
