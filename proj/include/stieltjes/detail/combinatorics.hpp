#pragma once

#include <cmath>

namespace stieltjes::detail {

/// C(n, k) in floating point; exact for the n <= 60 used here.
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

/// base^exponent by repeated squaring; 0^0 == 1.
inline double ipow(double base, int exponent) {
  double result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace stieltjes::detail
