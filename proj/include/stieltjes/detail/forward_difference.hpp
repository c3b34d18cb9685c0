#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstddef>
#include <vector>

namespace stieltjes::detail {

// Alternating binomial sums Σ_k C(j,k)(-1)^k g(k) lose about j*log10(2)
// digits at depth j; 100 decimal digits cover every depth used here.
using WideFloat = boost::multiprecision::cpp_bin_float_100;

// Feeds g(0), g(1), ... and returns Σ_{k<=j} C(j,k)(-1)^k g(k) after the j-th push.
class AlternatingDifferences {
 public:
  explicit AlternatingDifferences(std::size_t capacity = 0) { diagonal_.reserve(capacity + 1); }

  WideFloat push(WideFloat value) {
    // diagonal_ holds the trailing diagonal of the forward-difference table.
    for (auto& entry : diagonal_) {
      WideFloat next = value - entry;
      entry = value;
      value = next;
    }
    diagonal_.push_back(value);
    const bool odd = (diagonal_.size() % 2) == 0;
    return odd ? WideFloat(-value) : value;
  }

  std::size_t depth() const { return diagonal_.size(); }

 private:
  std::vector<WideFloat> diagonal_;
};

inline WideFloat wide_pow(WideFloat base, int exponent) {
  WideFloat result = 1;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace stieltjes::detail
