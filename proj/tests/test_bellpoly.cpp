#include <doctest.h>

#include <cmath>
#include <vector>

#include "reference_values.hpp"
#include "stieltjes/bell_identities.hpp"
#include "stieltjes/bellpoly.hpp"

using namespace stieltjes;
using namespace stieltjes::bell;

namespace {

Exponents exps(std::initializer_list<unsigned> e) { return Exponents(e); }

// Y_n by Faà di Bruno on exp(f): Y_n = d^n/dt^n exp(Σ x_j t^j / j!) at 0, via
// truncated power-series exponentiation in exact rationals.
Rational faa_di_bruno(int n, const std::vector<Rational>& xs) {
  std::vector<Rational> f(static_cast<std::size_t>(n) + 1, 0);
  Rational fact = 1;
  for (int j = 1; j <= n; ++j) {
    fact *= j;
    f[static_cast<std::size_t>(j)] = xs[static_cast<std::size_t>(j - 1)] / fact;
  }
  // g = exp(f): g' = f' g, so k g_k = Σ_{j=1}^{k} j f_j g_{k-j}.
  std::vector<Rational> g(static_cast<std::size_t>(n) + 1, 0);
  g[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += Rational(j) * f[j] * g[k - j];
    g[k] = acc / k;
  }
  Rational nfact = 1;
  for (int j = 2; j <= n; ++j) nfact *= j;
  return g[n] * nfact;
}

}  // namespace

TEST_CASE("partitions satisfy the weight condition and have the right count") {
  constexpr int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    const auto ps = partitions(n);
    CHECK(ps.size() == static_cast<std::size_t>(counts[n]));
    for (const auto& p : ps) CHECK(p.weight() == static_cast<unsigned>(n));
  }
  CHECK_THROWS_AS(partitions(-1), ArgumentError);
}

TEST_CASE("small complete Bell polynomials") {
  CHECK(complete_bell(0).to_string() == "1");
  CHECK(complete_bell(2).to_string() == "x1^2 + x2");

  const auto y4 = complete_bell(4);
  CHECK(y4.terms().size() == 5);
  CHECK(y4.coefficient(exps({4, 0, 0, 0})) == 1);
  CHECK(y4.coefficient(exps({2, 1, 0, 0})) == 6);
  CHECK(y4.coefficient(exps({1, 0, 1, 0})) == 4);
  CHECK(y4.coefficient(exps({0, 2, 0, 0})) == 3);
  CHECK(y4.coefficient(exps({0, 0, 0, 1})) == 1);
  CHECK(y4.coefficient(exps({0, 0, 0, 0})) == 0);
}

TEST_CASE("Y_6 regenerated from partitions") {
  const auto y6 = complete_bell(6);
  CHECK(y6.terms().size() == 11);
  CHECK(y6.coefficient(exps({6, 0, 0, 0, 0, 0})) == 1);
  CHECK(y6.coefficient(exps({4, 1, 0, 0, 0, 0})) == 15);
  CHECK(y6.coefficient(exps({3, 0, 1, 0, 0, 0})) == 20);
  CHECK(y6.coefficient(exps({2, 2, 0, 0, 0, 0})) == 45);
  CHECK(y6.coefficient(exps({2, 0, 0, 1, 0, 0})) == 15);
  CHECK(y6.coefficient(exps({1, 1, 1, 0, 0, 0})) == 60);
  CHECK(y6.coefficient(exps({1, 0, 0, 0, 1, 0})) == 6);
  CHECK(y6.coefficient(exps({0, 3, 0, 0, 0, 0})) == 15);
  CHECK(y6.coefficient(exps({0, 1, 0, 1, 0, 0})) == 15);
  CHECK(y6.coefficient(exps({0, 0, 2, 0, 0, 0})) == 10);
  CHECK(y6.coefficient(exps({0, 0, 0, 0, 0, 1})) == 1);
}

TEST_CASE("every term is weight-homogeneous with a positive coefficient") {
  for (int n = 0; n <= 12; ++n) {
    const auto y = complete_bell(n);
    for (const auto& [e, coeff] : y.terms()) {
      unsigned weight = 0;
      for (std::size_t j = 0; j < e.size(); ++j) weight += static_cast<unsigned>(j + 1) * e[j];
      CHECK(weight == static_cast<unsigned>(n));
      CHECK(coeff > 0);
    }
  }
}

TEST_CASE("capacity is enforced") {
  CHECK_NOTHROW(complete_bell(20));
  CHECK_THROWS_AS(complete_bell(21), CapacityError);
  CHECK_THROWS_AS(complete_bell(8, 7), CapacityError);
  CHECK_THROWS_AS(gamma_derivative_at_one(13), CapacityError);
  CHECK_THROWS_AS(inv_gamma_derivative_at_zero(13), CapacityError);
}

TEST_CASE("eval_bell examples and argument checks") {
  CHECK(eval_bell(1, std::vector<double>{7.0}) == 7.0);
  CHECK(eval_bell(3, std::vector<double>{1.0, 1.0, 1.0}) == 5.0);
  CHECK(eval_bell(2, std::vector<double>{0.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(eval_bell(3, std::vector<double>{1.0, 2.0}), ArgumentError);
  CHECK_THROWS_AS(complete_bell(3).evaluate<double>(std::vector<double>{1.0}), ArgumentError);
}

TEST_CASE("Bell numbers from both paths") {
  constexpr int bell_numbers[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (int n = 0; n <= 10; ++n) {
    const std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
    CHECK(eval_bell(n, ones) == bell_numbers[n]);
    CHECK(complete_bell(n).coefficient_sum() == bell_numbers[n]);
  }
}

TEST_CASE("recurrence and expansion agree with an independent exp-series construction") {
  const auto xs = sample_rationals(10, 7U);
  for (int n = 0; n <= 10; ++n) {
    const Rational oracle = faa_di_bruno(n, xs);
    CHECK(eval_bell<Rational>(n, xs) == oracle);
    CHECK(complete_bell(n).evaluate<Rational>(xs) == oracle);
  }
}

TEST_CASE("exact identities hold for random rationals") {
  for (std::uint32_t seed : {1U, 2U, 3U}) {
    const auto xs = sample_rationals(12, seed);
    const auto ys = sample_rationals(12, seed + 100U);
    for (int n = 1; n <= 12; ++n) CHECK(negation_convolution_residual(n, xs) == 0);
    for (int n = 0; n <= 10; ++n) {
      CHECK(addition_residual(n, xs, ys) == 0);
      CHECK(scaling_residual(n, Rational(-3, 2), xs) == 0);
      CHECK(shift_residual(n, Rational(5, 3), xs) == 0);
      CHECK(expansion_residual(n, xs) == 0);
    }
  }
}

TEST_CASE("identity residuals detect a wrong polynomial") {
  // Y_0 = 1 makes the n = 0 convolution equal 1, not 0.
  const auto xs = sample_rationals(4, 5U);
  CHECK(negation_convolution_residual(0, xs) == 1);
  CHECK_THROWS_AS(addition_residual(5, xs, xs), ArgumentError);
}

TEST_CASE("Gamma derivatives at 1") {
  const double g = reference::kEuler;
  CHECK(gamma_derivative_at_one(0) == 1.0);
  CHECK(gamma_derivative_at_one(1) == doctest::Approx(-g).epsilon(1e-15));
  CHECK(gamma_derivative_at_one(2) == doctest::Approx(reference::kZeta2 + g * g).epsilon(1e-14));
  CHECK(gamma_derivative_at_one(2) == doctest::Approx(1.9781119906).epsilon(1e-10));
  for (int m = 0; m <= 12; ++m) {
    CHECK(gamma_derivative_at_one(m) ==
          doctest::Approx(reference::kGammaDerivAtOne[m]).epsilon(1e-13));
  }
}

TEST_CASE("reciprocal Gamma derivatives at 0") {
  const double g = reference::kEuler;
  CHECK(inv_gamma_derivative_at_zero(0) == 1.0);
  CHECK(inv_gamma_derivative_at_zero(1) == doctest::Approx(g).epsilon(1e-15));
  CHECK(inv_gamma_derivative_at_zero(2) ==
        doctest::Approx(g * g - reference::kZeta2).epsilon(1e-14));
  // The alternating polygamma arguments cancel in Y_k; c_12 keeps about 11 digits.
  for (int k = 0; k <= 12; ++k) {
    CHECK(inv_gamma_derivative_at_zero(k) ==
          doctest::Approx(reference::kInvGammaDerivAtOne[k]).epsilon(1e-11));
  }
  // Central second difference of 1/Γ(1+x) at 0.
  const double h = 1e-4;
  const double fd = (1.0 / std::tgamma(1.0 + h) - 2.0 + 1.0 / std::tgamma(1.0 - h)) / (h * h);
  CHECK(inv_gamma_derivative_at_zero(2) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("argument vectors") {
  const auto a = gamma_derivative_arguments(3);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == doctest::Approx(-reference::kEuler));
  CHECK(a[1] == doctest::Approx(reference::kZeta2));
  CHECK(a[2] == doctest::Approx(-2.0 * reference::kZeta3));
  const auto b = inv_gamma_derivative_arguments(3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(b[i] == -a[i]);
}
