#pragma once

// Closed-form identities around the Stieltjes constants: zeta derivatives at
// s = 0, Binet/Barnes integrals, two integral continuations of ζ(s, u), and
// the inversion and positivity machinery linking γ_k to Γ^{(m)}(1).
//
// Every γ_k consumed here comes from gamma_hasse, so each identity pits a
// series evaluation against an independent quadrature.

#include <cstddef>

#include "stieltjes/method_result.hpp"
#include "stieltjes/quad.hpp"

namespace stieltjes {

/// Two evaluations of the same quantity by different routes.
struct TwoSided {
  double left = 0.0;
  double right = 0.0;
  std::size_t evaluations = 0;

  double difference() const { return left > right ? left - right : right - left; }
};

/// left: ∫_0^∞ e^{-x}[1/(1-e^{-x}) - 1/x] log^n x dx.
/// right: Σ_j C(n,j) (-1)^j γ_j Γ^{(n-j)}(1). n <= 8.
TwoSided a_coefficient(int n, const quad::QuadConfig& cfg = {});

/// left: Σ_k C(n,k)(-1)^k [γ_k(u) - log^k u/(2u) + log^{k+1} u/(k+1)] Γ^{(n-k)}(1).
/// right: ∫_0^∞ e^{-uv} log^n v [1/(e^v-1) - 1/v + 1/2] dv. n <= 8.
TwoSided inversion_sum(int n, double u, const quad::QuadConfig& cfg = {});

/// I_n = ∫_0^∞ log^n v e^{-v} [1/(e^v-1) - 1/v + 1/2] dv, positive for every n. n <= 12.
MethodResult i_n_integral(int n, const quad::QuadConfig& cfg = {});

/// ζ'(0, u) from the Binet integral.
double zeta_prime0(double u, const quad::QuadConfig& cfg = {});

/// ζ''(0, u) = (1/2 - u) log^2 u + 2u log u - 2u - 2 ∫_0^∞ log(u^2+x^2) atan(x/u) / (e^{2πx}-1) dx.
double zeta_second0(double u, const quad::QuadConfig& cfg = {});

/// log G(1+t) for the Barnes G-function, t > 0.
double barnes_g_log(double t, const quad::QuadConfig& cfg = {});

/// ∫_0^∞ (1-e^{-v})/v^2 [1/(e^v-1) - 1/v + 1/2] dv, which equals 1/4.
quad::QuadResult quarter_integral(const quad::QuadConfig& cfg = {});

/// ζ(s, u) by Hermite's integral; valid for every real s != 1.
double hurwitz_hermite(double s, double u, const quad::QuadConfig& cfg = {});

/// ζ(s, u) by the Laplace-type Binet integral; s > -1, s != 1, |s| >= 1e-3.
double hurwitz_laplace(double s, double u, const quad::QuadConfig& cfg = {});

/// Half-width of the neighbourhood of s = 0 that hurwitz_laplace rejects.
inline constexpr double kLaplaceZeroExclusion = 1e-3;

/// δ_n for n in {0, 1}. left: the partial-sum form at m; right: (-1)^n [ζ^{(n)}(0) + n!].
TwoSided delta_n(int n, long m = 1000000, const quad::QuadConfig& cfg = {});

}  // namespace stieltjes
