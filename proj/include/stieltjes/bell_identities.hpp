#pragma once

// Exact residuals of the complete Bell polynomial identities. Every function
// returns left - right in rational arithmetic, so a correct engine yields 0.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace stieltjes::bell {

using Rational = boost::multiprecision::cpp_rational;

/// Deterministic rationals p/q with |p| <= 9 and 1 <= q <= 7.
std::vector<Rational> sample_rationals(std::size_t count, std::uint32_t seed);

/// Σ_j C(n,j) Y_j(x) Y_{n-j}(-x), which vanishes for n >= 1.
Rational negation_convolution_residual(int n, std::span<const Rational> xs);

/// Y_n(x+y) - Σ_k C(n,k) Y_{n-k}(x) Y_k(y).
Rational addition_residual(int n, std::span<const Rational> xs, std::span<const Rational> ys);

/// Y_n(a x_1, a^2 x_2, ..., a^n x_n) - a^n Y_n(x).
Rational scaling_residual(int n, const Rational& a, std::span<const Rational> xs);

/// Y_n(x_1 + α, x_2, ..., x_n) - Σ_k C(n,k) α^{n-k} Y_k(x).
Rational shift_residual(int n, const Rational& alpha, std::span<const Rational> xs);

/// eval_bell(n, x) - complete_bell(n).evaluate(x).
Rational expansion_residual(int n, std::span<const Rational> xs);

}  // namespace stieltjes::bell
