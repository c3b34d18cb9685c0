#pragma once

// Alternating Hurwitz zeta ζ_a(s, x) = Σ_{n>=0} (-1)^n (n+x)^{-s} and the
// constants formulas it yields through the Stieltjes constants.

#include <utility>

#include "stieltjes/quad.hpp"

namespace stieltjes::alteta {

struct AltZetaRequest {
  static constexpr int kMaxOrder = 6;

  double s = 1.0;
  double x = 1.0;
  int order = 0;

  void validate() const;
};

struct AltHasseOptions {
  double tol = 1e-16;
  int max_outer = 200;
};

/// ζ_a(s, x) via ζ_a = 2^{-s}[ζ(s, x/2) - ζ(s, (1+x)/2)], or the Hasse form near s = 1.
double alt_zeta(double s, double x, const quad::QuadConfig& cfg = {});

/// Direct alternating series with Cohen-Villegas-Zagier acceleration; s > 0.
double alt_zeta_series(double s, double x);

/// Σ_i 2^{-(i+1)} Σ_j C(i,j)(-1)^j log^n(x+j)/(x+j)^s, which is (-1)^n ∂^n/∂s^n ζ_a(s, x).
double alt_zeta_hasse(const AltZetaRequest& req, const AltHasseOptions& opt = {});
double alt_zeta_hasse(double s, double x, int n, const AltHasseOptions& opt = {});

/// Two forms of ∂^n/∂s^n ζ_a(s, x) at s = 1: (Stieltjes form, Hasse form). n <= 4.
std::pair<double, double> alt_deriv_at_1(int n, double x);

/// γ = ½ log 2 - S_1 / log 2 with S_1 summed over outer indices i <= max_outer.
double euler_constant_59(int max_outer = 60);

/// γ_1 = -(1/12) log^2 2 + ½ S_1 - S_2 / (2 log 2).
double gamma1_via_alt();

/// γ_p(½) from γ_0..γ_p. p <= 6.
double gamma_half_closed(int p);

/// Σ_{r=1}^{q-1} γ_p(r/q): (closed form, direct sum). p <= 4, 2 <= q <= 6.
std::pair<double, double> stieltjes_sum_over_fractions(int p, int q);

/// |γ_k(3/2) - γ_k(½) - (-1)^{k+1} 2 log^k 2|. k <= 5.
double half_shift_check(int k);

}  // namespace stieltjes::alteta
