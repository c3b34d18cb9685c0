#pragma once

// Base special functions for real positive arguments.

namespace stieltjes::specfun {

/// log Γ(x) for x > 0.
double log_gamma(double x);

/// ψ(x) = Γ'(x)/Γ(x) for x > 0.
double digamma(double x);

/// ψ^{(p)}(x) = (-1)^{p+1} p! ζ(p+1, x), for 1 <= p <= 12 and x > 0.
double polygamma(int p, double x);

/// ζ(s, x) = Σ_{k>=0} (k+x)^{-s} for s > 1 and x > 0.
///
/// The first N terms are summed directly with N chosen so that x+N >= max(10, s);
/// the remainder is the Euler–Maclaurin tail through B_12.
double hurwitz_zeta_series(double s, double x);

/// Riemann ζ(s) for s > 1.
double zeta(double s);

}  // namespace stieltjes::specfun
