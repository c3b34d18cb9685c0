#include "stieltjes/identities.hpp"

#include <cmath>
#include <string>

#include "stieltjes/bellpoly.hpp"
#include "stieltjes/constants.hpp"
#include "stieltjes/detail/combinatorics.hpp"
#include "stieltjes/detail/summation.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/gamma.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/moments.hpp"
#include "stieltjes/specfun.hpp"

namespace stieltjes {

namespace {

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": argument must be positive, got " + std::to_string(x));
  }
}

void require_order(int n, int limit, const char* fn) {
  if (n < 0 || n > limit) {
    throw CapacityError(std::string(fn) + ": order must be in 0.." + std::to_string(limit));
  }
}

double stieltjes_value(int k, double u) { return gamma_hasse({k, u}).value; }

}  // namespace

TwoSided a_coefficient(int n, const quad::QuadConfig& cfg) {
  require_order(n, 8, "a_coefficient");
  const auto q = coppo_moment(n, cfg);
  detail::CompensatedSum series;
  for (int j = 0; j <= n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    series += detail::binomial(n, j) * sign * stieltjes_value(j, 1.0) *
              bell::gamma_derivative_at_one(n - j);
  }
  return {q.value, series.value(), q.evaluations};
}

TwoSided inversion_sum(int n, double u, const quad::QuadConfig& cfg) {
  require_order(n, 8, "inversion_sum");
  require_positive(u, "inversion_sum");
  const double lu = std::log(u);
  detail::CompensatedSum sum;
  for (int k = 0; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double bracket = stieltjes_value(k, u) - detail::ipow(lu, k) / (2.0 * u) +
                           detail::ipow(lu, k + 1) / (k + 1);
    sum += detail::binomial(n, k) * sign * bracket * bell::gamma_derivative_at_one(n - k);
  }
  const auto q = binet_moment(n, u, cfg);
  return {sum.value(), q.value, q.evaluations};
}

MethodResult i_n_integral(int n, const quad::QuadConfig& cfg) {
  require_order(n, 12, "i_n_integral");
  const auto q = binet_moment(n, 1.0, cfg);
  MethodResult r;
  r.method = Method::Quadrature;
  r.value = q.value;
  r.error_estimate = q.error_estimate;
  r.evaluations = q.evaluations;
  r.flags.not_converged = !q.converged;
  diagnose_cancellation(r, q.peak_term);
  return r;
}

double zeta_prime0(double u, const quad::QuadConfig& cfg) {
  require_positive(u, "zeta_prime0");
  const auto q = quad::integrate_semiaxis(
      [u](double v) {
        const double decay = std::exp(-u * v);
        return decay == 0.0 ? 0.0 : decay * kernels::binet_bracket_over_v(v);
      },
      cfg);
  return q.value - (0.5 - u) * std::log(u) - u;
}

double zeta_second0(double u, const quad::QuadConfig& cfg) {
  require_positive(u, "zeta_second0");
  const auto q = quad::integrate_semiaxis(
      [u](double x) {
        const double w = kernels::plana_weight(x);
        if (w == 0.0) return 0.0;
        return std::log(u * u + x * x) * std::atan(x / u) * w;
      },
      cfg);
  const double lu = std::log(u);
  return (0.5 - u) * lu * lu + 2.0 * u * lu - 2.0 * u - 2.0 * q.value;
}

double barnes_g_log(double t, const quad::QuadConfig& cfg) {
  require_positive(t, "barnes_g_log");
  const auto q = quad::integrate_semiaxis(
      [t](double v) {
        // e^{-tv} - e^{-v} without overflow or cancellation on either side of t = 1.
        const double diff = t <= 1.0 ? -std::exp(-t * v) * std::expm1(-(1.0 - t) * v)
                                     : std::exp(-v) * std::expm1((1.0 - t) * v);
        if (diff == 0.0) return 0.0;
        return diff / v * kernels::binet_bracket_over_v(v);
      },
      cfg);
  return t * specfun::log_gamma(t) + 0.25 * (t * t - 1.0) - 0.5 * t * (t - 1.0) * std::log(t) +
         q.value;
}

quad::QuadResult quarter_integral(const quad::QuadConfig& cfg) {
  return quad::integrate_semiaxis(
      [](double v) { return -std::expm1(-v) / v * kernels::binet_bracket_over_v(v); }, cfg);
}

double hurwitz_hermite(double s, double u, const quad::QuadConfig& cfg) {
  require_positive(u, "hurwitz_hermite");
  if (s == 1.0) throw DomainError("hurwitz_hermite: pole at s = 1");
  const auto q = quad::integrate_semiaxis(
      [s, u](double x) {
        const double w = kernels::plana_weight(x);
        if (w == 0.0) return 0.0;
        return std::sin(s * std::atan(x / u)) * std::pow(u * u + x * x, -0.5 * s) * w;
      },
      cfg);
  return 0.5 * std::pow(u, -s) + std::pow(u, 1.0 - s) / (s - 1.0) + 2.0 * q.value;
}

double hurwitz_laplace(double s, double u, const quad::QuadConfig& cfg) {
  require_positive(u, "hurwitz_laplace");
  if (!(s > -1.0)) throw DomainError("hurwitz_laplace: requires s > -1");
  if (s == 1.0) throw DomainError("hurwitz_laplace: pole at s = 1");
  if (std::abs(s) < kLaplaceZeroExclusion) {
    throw DomainError("hurwitz_laplace: 1/Γ(s) vanishes near s = 0; use hurwitz_hermite");
  }
  const auto q = quad::integrate_semiaxis(
      [s, u](double v) {
        const double decay = std::exp(-u * v);
        if (decay == 0.0) return 0.0;
        // v^{s-1} * bracket(v) = v^s * bracket(v)/v keeps the v -> 0 limit finite.
        return decay * std::pow(v, s) * kernels::binet_bracket_over_v(v);
      },
      cfg);
  return 0.5 * std::pow(u, -s) + std::pow(u, 1.0 - s) / (s - 1.0) + q.value / std::tgamma(s);
}

TwoSided delta_n(int n, long m, const quad::QuadConfig& cfg) {
  if (n != 0 && n != 1) throw CapacityError("delta_n: only n = 0 and n = 1 are supported");
  if (m < 2) throw ArgumentError("delta_n: m must be at least 2");
  const double dm = static_cast<double>(m);
  TwoSided out;
  if (n == 0) {
    // Σ_{k<=m} 1 - (m - 1) - 1/2
    out.left = dm - (dm - 1.0) - 0.5;
    out.right = -(-0.5 + 1.0) * -1.0;  // (-1)^0 [ζ(0) + 0!]
    return out;
  }
  detail::CompensatedSum logs;
  for (long k = 2; k <= m; ++k) logs += std::log(static_cast<double>(k));
  const double lm = std::log(dm);
  logs -= dm * lm - dm + 1.0;  // ∫_1^m log x dx
  logs -= 0.5 * lm;
  out.left = logs.value();
  out.right = -(zeta_prime0(1.0, cfg) + 1.0);
  out.evaluations = static_cast<std::size_t>(m);
  return out;
}

}  // namespace stieltjes
