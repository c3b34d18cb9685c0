#include "stieltjes/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "stieltjes/detail/summation.hpp"
#include "stieltjes/error.hpp"

namespace stieltjes::specfun {

namespace {

// B_{2j} / (2j)! for j = 1..6
constexpr std::array<double, 6> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
};

// B_{2j} / (2j) for the digamma asymptotic series
constexpr std::array<double, 6> kBernoulliOverIndex = {
    1.0 / 6.0 / 2.0,  -1.0 / 30.0 / 4.0, 1.0 / 42.0 / 6.0,
    -1.0 / 30.0 / 8.0, 5.0 / 66.0 / 10.0, -691.0 / 2730.0 / 12.0,
};

constexpr double kShiftFloor = 10.0;

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": argument must be positive and finite, got " +
                      std::to_string(x));
  }
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double digamma(double x) {
  require_positive(x, "digamma");
  detail::CompensatedSum acc;
  while (x < kShiftFloor) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double power = inv2;
  double tail = 0.0;
  for (double c : kBernoulliOverIndex) {
    tail += c * power;
    power *= inv2;
  }
  acc += std::log(x);
  acc -= 0.5 / x;
  acc -= tail;
  return acc.value();
}

double hurwitz_zeta_series(double s, double x) {
  if (!(s > 1.0)) {
    throw DomainError("hurwitz_zeta_series: requires s > 1, got s=" + std::to_string(s));
  }
  require_positive(x, "hurwitz_zeta_series");

  const double floor = std::max(kShiftFloor, s);
  detail::CompensatedSum acc;
  double shifted = x;
  while (shifted < floor) {
    acc += std::pow(shifted, -s);
    shifted += 1.0;
  }

  const double lead = std::pow(shifted, -s);
  acc += shifted * lead / (s - 1.0);
  acc += 0.5 * lead;

  // Σ B_{2j}/(2j)! · s(s+1)…(s+2j−2) · X^{-s-2j+1}
  double rising = s;
  double power = lead / shifted;
  const double inv2 = 1.0 / (shifted * shifted);
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    acc += kBernoulliOverFactorial[j] * rising * power;
    const double k = 2.0 * static_cast<double>(j + 1);
    rising *= (s + k - 1.0) * (s + k);
    power *= inv2;
  }
  return acc.value();
}

double zeta(double s) { return hurwitz_zeta_series(s, 1.0); }

double polygamma(int p, double x) {
  if (p < 1 || p > 12) {
    throw CapacityError("polygamma: order must be in 1..12, got " + std::to_string(p));
  }
  require_positive(x, "polygamma");
  double factorial = 1.0;
  for (int k = 2; k <= p; ++k) factorial *= k;
  const double sign = (p % 2 == 1) ? 1.0 : -1.0;
  return sign * factorial * hurwitz_zeta_series(p + 1.0, x);
}

}  // namespace stieltjes::specfun
