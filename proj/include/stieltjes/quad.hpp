#pragma once

// Double-exponential quadrature.
//
// integrate_finite uses the tanh-sinh map on (a, b); integrate_semiaxis uses
// exp-sinh on (0, ∞). Each level halves the step of the previous one and
// reuses its samples, so level L costs only the new odd-indexed nodes. The
// iteration stops once two successive levels differ by at most
// target_tol * max(1, |I|), or when max_level is reached; in the latter case
// the result is still returned, with converged == false.
//
// Endpoint distances are computed directly (1 - tanh y = 2 / (1 + e^{2y})),
// so abscissae never round onto a finite endpoint; a node that would is skipped.

#include <cstddef>
#include <functional>

namespace stieltjes::quad {

struct QuadConfig {
  double target_tol = 1e-12;
  int max_level = 12;
  double truncation_guard = 1e-300;

  /// Throws ArgumentError unless target_tol >= 1e-15, max_level in [3, 20] and guard in (0, 1).
  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  /// |I_L - I_{L-1}| for the two finest levels computed. A heuristic, not a bound.
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  int levels = 0;
  bool converged = false;
  /// Largest |w_k f(x_k)| seen; used by callers to diagnose cancellation.
  double peak_term = 0.0;
};

using Integrand = std::function<double(double)>;

/// ∫_a^b f(x) dx with a < b. Integrable endpoint singularities are allowed.
/// Throws IntegrandError if f returns a non-finite value.
QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg = {});

/// ∫_0^∞ f(x) dx for f with at worst log/algebraic growth at 0 and exponential decay.
QuadResult integrate_semiaxis(const Integrand& f, const QuadConfig& cfg = {});

/// |2 ∫_0^∞ sin(xt)/(e^{2πx} - 1) dx - (coth(t/2)/2 - 1/t)|, for t > 0.
double legendre_relation_check(double t, const QuadConfig& cfg = {});

/// |∫_0^∞ e^{-uy} sin(xy)/y dy - atan(x/u)|, for u > 0.
double atan_laplace_check(double u, double x, const QuadConfig& cfg = {});

}  // namespace stieltjes::quad
