#pragma once

// Generalised Stieltjes constants γ_n(u), the Laurent coefficients of
// ζ(s, u) = 1/(s-1) + Σ_n (-1)^n γ_n(u) (s-1)^n / n!, by four independent
// routes plus two special-purpose ones:
//
//   gamma_hasse        binomial double series in log^{n+1}(u+k)
//   gamma_coffey       Abel–Plana integral with a complex logarithm
//   gamma_bell_family  Bell-polynomial coefficients times Binet-kernel moments
//   gamma_brede        Brede's Appell polynomial against the Coppo kernel (u = 1)
//   gamma_limit        Stieltjes's defining limit, Euler–Maclaurin corrected (u = 1)
//   gamma1_hermite     two real integrals for γ_1(u)

#include <vector>

#include "stieltjes/method_result.hpp"
#include "stieltjes/polynomial.hpp"
#include "stieltjes/quad.hpp"

namespace stieltjes {

inline constexpr int kTestedMaxOrder = 12;

struct GammaRequest {
  int order = 0;
  double u = 1.0;

  /// Throws DomainError for order < 0 or u <= 0.
  void validate() const;
};

struct HasseOptions {
  /// Truncate once two consecutive outer terms fall below tol / 10.
  double tol = 1e-16;
  int j_max = 120;
  /// Integer shift applied to u < shift before summing; 0 disables.
  int shift = 24;
};

MethodResult gamma_hasse(const GammaRequest& req, const HasseOptions& opt = {});

MethodResult gamma_coffey(const GammaRequest& req, const quad::QuadConfig& cfg = {});

MethodResult gamma1_hermite(double u, const quad::QuadConfig& cfg = {});

/// c_k = Y_k(-ψ(1), -ψ'(1), ..., -ψ^{(k-1)}(1)) = d^k/ds^k [1/Γ(s)] at s = 1, k = 0..k_max.
/// Computed once and cached. k_max <= 12.
std::vector<double> bell_family_coefficients(int k_max);

/// Which bracket multiplies e^{-uv} log^m v in gamma_bell_family.
enum class BellKernel {
  WithHalf,   // 1/(e^v-1) - 1/v + 1/2; valid for every u
  WithoutHalf,  // 1/(e^v-1) - 1/v; u = 1 and n >= 1 only
  Coppo,      // 1/(1-e^{-v}) - 1/v; u = 1 and n >= 1 only
};

MethodResult gamma_bell_family(const GammaRequest& req, const quad::QuadConfig& cfg = {},
                               BellKernel kernel = BellKernel::WithHalf);

/// Brede's polynomial p_n(z) = Σ_k C(n,k) (-1)^k c_k z^{n-k}; n <= 12.
RealPolynomial brede_poly(int n);

/// γ_n = γ_n(1) from p_n, n <= 10.
MethodResult gamma_brede(int n, const quad::QuadConfig& cfg = {});

/// Σ_{m<=r} log^n m / m - log^{n+1} r / (n+1), minus log^n r / (2r) when corrected.
/// error_estimate is |S(r) - S(r/2)|. n <= 8, r >= 10.
MethodResult gamma_limit(int n, long r, bool corrected = true);

}  // namespace stieltjes
