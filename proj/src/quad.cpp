#include "stieltjes/quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "stieltjes/detail/summation.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/kernels.hpp"

namespace stieltjes::quad {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr int kMinLevel = 3;

double sample(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) throw IntegrandError("non-finite integrand value", x);
  return y;
}

// Shared driver: `level_sum(h, first_level)` returns Σ w_k f(x_k) over the nodes
// new at step h (all integers k at the first level, odd k afterwards).
template <class LevelSum>
QuadResult refine(const QuadConfig& cfg, LevelSum&& level_sum) {
  cfg.validate();
  QuadResult result;
  detail::CompensatedSum total;
  double h = 1.0;
  double previous = 0.0;
  for (int level = 0; level <= cfg.max_level; ++level) {
    total += level_sum(h, level == 0, result);
    const double estimate = total.value() * h;
    result.levels = level + 1;
    if (level > 0) {
      result.error_estimate = std::abs(estimate - previous);
      if (level >= kMinLevel &&
          result.error_estimate <= cfg.target_tol * std::max(1.0, std::abs(estimate))) {
        result.value = estimate;
        result.converged = true;
        return result;
      }
    }
    previous = estimate;
    result.value = estimate;
    h *= 0.5;
  }
  return result;
}

}  // namespace

void QuadConfig::validate() const {
  if (!(target_tol >= 1e-15)) {
    throw ArgumentError("QuadConfig: target_tol must be >= 1e-15, got " + std::to_string(target_tol));
  }
  if (max_level < kMinLevel || max_level > 20) {
    throw ArgumentError("QuadConfig: max_level must be in [3, 20], got " + std::to_string(max_level));
  }
  if (!(truncation_guard > 0.0 && truncation_guard < 1.0)) {
    throw ArgumentError("QuadConfig: truncation_guard must be in (0, 1)");
  }
}

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ArgumentError("integrate_finite: need finite a < b");
  }
  const double centre = 0.5 * (a + b);
  const double half_width = 0.5 * (b - a);
  // δ(t) = 1 - tanh(π/2 sinh t) falls below the guard beyond t_max.
  const double t_max = std::asinh(std::log(2.0 / cfg.truncation_guard) / std::numbers::pi);

  auto node_pair = [&](double t, QuadResult& r) {
    const double y = kHalfPi * std::sinh(t);
    const double delta = 2.0 / (1.0 + std::exp(2.0 * y));  // 1 - tanh(y), y >= 0
    const double weight = half_width * kHalfPi * std::cosh(t) * delta * (2.0 - delta);
    const double offset = half_width * delta;
    double sum = 0.0;
    for (double x : {b - offset, a + offset}) {
      if (x <= a || x >= b) continue;
      const double term = weight * sample(f, x);
      ++r.evaluations;
      r.peak_term = std::max(r.peak_term, std::abs(term));
      sum += term;
    }
    return sum;
  };

  return refine(cfg, [&](double h, bool first, QuadResult& r) {
    detail::CompensatedSum s;
    if (first) {
      const double term = half_width * kHalfPi * sample(f, centre);
      ++r.evaluations;
      r.peak_term = std::max(r.peak_term, std::abs(term));
      s += term;
    }
    const int step = first ? 1 : 2;
    for (int k = 1;; k += step) {
      const double t = k * h;
      if (t > t_max) break;
      s += node_pair(t, r);
    }
    return s.value();
  });
}

QuadResult integrate_semiaxis(const Integrand& f, const QuadConfig& cfg) {
  // Left tail: x = exp(π/2 sinh t) and the weight both fall below the guard.
  const double t_min = -std::asinh(-std::log(cfg.truncation_guard) / kHalfPi);
  // Right tail: hard stop before exp overflows.
  const double t_cap = std::asinh(700.0 / kHalfPi);

  auto node = [&](double t, QuadResult& r, double& term) {
    const double y = kHalfPi * std::sinh(t);
    const double x = std::exp(y);
    if (!(x > 0.0) || !std::isfinite(x)) return false;
    const double weight = kHalfPi * std::cosh(t) * x;
    term = weight * sample(f, x);
    ++r.evaluations;
    r.peak_term = std::max(r.peak_term, std::abs(term));
    return true;
  };

  return refine(cfg, [&](double h, bool first, QuadResult& r) {
    detail::CompensatedSum s;
    double term = 0.0;
    const int step = first ? 1 : 2;
    const int start = first ? 0 : 1;
    // Right branch: stop after two consecutive negligible weighted samples.
    int quiet = 0;
    for (int k = start;; k += step) {
      const double t = k * h;
      if (t > t_cap || !node(t, r, term)) break;
      s += term;
      quiet = (std::abs(term) < cfg.truncation_guard) ? quiet + 1 : 0;
      if (quiet >= 2) break;
    }
    for (int k = 1;; k += step) {
      const double t = -k * h;
      if (t < t_min || !node(t, r, term)) break;
      s += term;
    }
    return s.value();
  });
}

double legendre_relation_check(double t, const QuadConfig& cfg) {
  if (!(t > 0.0)) throw DomainError("legendre_relation_check: t must be positive");
  const auto r = integrate_semiaxis(
      [t](double x) {
        const double w = kernels::plana_weight(x);
        return w == 0.0 ? 0.0 : std::sin(x * t) * w;
      },
      cfg);
  const double rhs = 0.5 / std::tanh(0.5 * t) - 1.0 / t;
  return std::abs(2.0 * r.value - rhs);
}

double atan_laplace_check(double u, double x, const QuadConfig& cfg) {
  if (!(u > 0.0)) throw DomainError("atan_laplace_check: u must be positive");
  const auto r = integrate_semiaxis(
      [u, x](double y) {
        const double decay = std::exp(-u * y);
        if (decay == 0.0) return 0.0;
        return decay * (y == 0.0 ? x : std::sin(x * y) / y);
      },
      cfg);
  return std::abs(r.value - std::atan2(x, u));
}

}  // namespace stieltjes::quad
