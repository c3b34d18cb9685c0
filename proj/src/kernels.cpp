#include "stieltjes/kernels.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace stieltjes::kernels {

namespace {

// B_{2k} / (2k)! for k = 1..12; the series converges for |v| < 2π and at
// v = 1 the twelfth term is below 1e-19 of the first.
constexpr std::array<double, 12> kSeries = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.204484017332394e23,
};

constexpr double kSeriesCutoff = 1.0;

// Σ B_{2k} v^{2k-2} / (2k)!, so that bracket(v) = v * odd_series(v).
double odd_series(double v) {
  const double v2 = v * v;
  double acc = 0.0;
  for (auto it = kSeries.rbegin(); it != kSeries.rend(); ++it) acc = acc * v2 + *it;
  return acc;
}

}  // namespace

double binet_bracket(double v) {
  if (v < kSeriesCutoff) return v * odd_series(v);
  return 1.0 / std::expm1(v) - 1.0 / v + 0.5;
}

double bose_bracket(double v) {
  if (v < kSeriesCutoff) return v * odd_series(v) - 0.5;
  return 1.0 / std::expm1(v) - 1.0 / v;
}

double coppo_bracket(double v) {
  if (v < kSeriesCutoff) return v * odd_series(v) + 0.5;
  return 1.0 / -std::expm1(-v) - 1.0 / v;
}

double binet_bracket_over_v(double v) {
  if (v < kSeriesCutoff) return odd_series(v);
  return binet_bracket(v) / v;
}

double plana_weight(double x) {
  const double arg = 2.0 * std::numbers::pi * x;
  if (arg > 745.0) return 0.0;
  if (arg > 40.0) return std::exp(-arg);
  return 1.0 / std::expm1(arg);
}

}  // namespace stieltjes::kernels
