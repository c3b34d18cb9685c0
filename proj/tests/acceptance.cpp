// Acceptance suite: one pass/fail line per criterion.
//
// Exit status is 0 when every criterion passes or fails only as listed in
// kKnownFailures. Those are printed as FAIL too; the README explains each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "reference_values.hpp"
#include "stieltjes/alteta.hpp"
#include "stieltjes/bell_identities.hpp"
#include "stieltjes/bellpoly.hpp"
#include "stieltjes/detail/combinatorics.hpp"
#include "stieltjes/gamma.hpp"
#include "stieltjes/identities.hpp"
#include "stieltjes/moments.hpp"
#include "stieltjes/quad.hpp"
#include "stieltjes/specfun.hpp"

using namespace stieltjes;
using Clock = std::chrono::steady_clock;

namespace {

// Criterion 5: I_n < 0 for n = 5, 7, 9, 11.
const std::set<int> kKnownFailures = {5};

constexpr double kSpreadTol = 1e-8;
constexpr double kMethodSeconds = 10.0;
constexpr double kLerchTol = 1e-9;
constexpr double kQuarterTol = 1e-10;
constexpr double kInversionTol = 1e-7;
constexpr double kBridgeTol = 1e-8;
constexpr double kEulerRelTol = 5e-9;
constexpr double kGamma1Tol = 1e-7;
constexpr double kHurwitzTol = 1e-8;
constexpr double kBredeCoeffTol = 1e-12;
constexpr double kAppellTol = 1e-12;
constexpr double kBredeMomentTol = 1e-8;
constexpr double kClosedWebTol = 1e-7;
constexpr double kDeltaTol = 1e-5;
constexpr double kSuiteSeconds = 180.0;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double truncated4(double v) { return std::trunc(v * 1e4) / 1e4; }

Verdict published_digits() {
  Verdict v;
  constexpr double printed[] = {0.5772, -0.0728, -0.0096};
  struct Route {
    const char* name;
    std::function<MethodResult(int)> eval;
  };
  const std::vector<Route> routes = {
      {"hasse", [](int n) { return gamma_hasse({n, 1.0}); }},
      {"coffey", [](int n) { return gamma_coffey({n, 1.0}); }},
      {"bell", [](int n) { return gamma_bell_family({n, 1.0}); }},
      {"brede", [](int n) { return gamma_brede(n); }},
      {"limit", [](int n) { return gamma_limit(n, 1000000); }},
  };
  double worst_spread = 0.0;
  double slowest = 0.0;
  for (int n = 0; n <= 3; ++n) {
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const auto& route : routes) {
      const auto t0 = Clock::now();
      const auto r = route.eval(n);
      slowest = std::max(slowest, seconds_since(t0));
      lo = std::min(lo, r.value);
      hi = std::max(hi, r.value);
      v.require(!r.flags.not_converged, std::string(route.name) + " not converged");
      if (n <= 2) {
        v.require(truncated4(r.value) == printed[n],
                  std::string(route.name) + " digits n=" + std::to_string(n));
      }
    }
    if (n == 1) {
      const auto t0 = Clock::now();
      const auto r = gamma1_hermite(1.0);
      slowest = std::max(slowest, seconds_since(t0));
      v.require(truncated4(r.value) == printed[1], "hermite1 digits");
      lo = std::min(lo, r.value);
      hi = std::max(hi, r.value);
    }
    worst_spread = std::max(worst_spread, hi - lo);
  }
  v.require(worst_spread <= kSpreadTol, "spread " + num(worst_spread));
  v.require(slowest <= kMethodSeconds, "slowest method " + num(slowest) + " s");
  if (v.pass) v.detail = "max spread " + num(worst_spread) + ", slowest " + num(slowest) + " s";
  return v;
}

Verdict lerch() {
  Verdict v;
  double worst = 0.0;
  for (double u : {0.25, 0.5, 1.0, 2.0, 5.0}) {
    worst = std::max(worst, std::abs(zeta_prime0(u) - (std::lgamma(u) - 0.5 * reference::kLog2Pi)));
  }
  worst = std::max(worst, std::abs(zeta_prime0(1.0) + 0.5 * reference::kLog2Pi));
  worst = std::max(worst, std::abs(zeta_prime0(0.5) + 0.5 * reference::kLog2));
  v.require(worst <= kLerchTol, "residual " + num(worst));
  if (v.pass) v.detail = "max residual " + num(worst);
  return v;
}

Verdict quarter() {
  Verdict v;
  const double err = std::abs(quarter_integral().value - 0.25);
  v.require(err <= kQuarterTol, "error " + num(err));
  if (v.pass) v.detail = "error " + num(err);
  return v;
}

Verdict inversion() {
  Verdict v;
  const double g = reference::kEuler;
  const double g1 = reference::kStieltjes[1];
  const double g2 = reference::kStieltjes[2];
  const double closed[] = {g - 0.5, -g * g - g1 + 0.5 * g,
                           (g - 0.5) * (g * g + reference::kZeta2) + 2.0 * g * g1 + g2};
  double worst = 0.0;
  for (int n = 0; n <= 6; ++n) {
    const auto t = inversion_sum(n, 1.0);
    worst = std::max(worst, t.difference());
    if (n <= 2) {
      worst = std::max(worst, std::abs(t.left - closed[n]));
      worst = std::max(worst, std::abs(t.right - closed[n]));
    }
  }
  v.require(worst <= kInversionTol, "difference " + num(worst));
  if (v.pass) v.detail = "max difference " + num(worst);
  return v;
}

Verdict positivity() {
  Verdict v;
  std::string negatives;
  for (int n = 0; n <= 12; ++n) {
    const auto r = i_n_integral(n);
    if (!(r.value > 0.0)) negatives += " I_" + std::to_string(n) + "=" + num(r.value);
    v.require(r.error_estimate < std::abs(r.value), "error estimate n=" + std::to_string(n));
  }
  v.require(negatives.empty(), "nonpositive:" + negatives);
  return v;
}

Verdict exact_bell() {
  Verdict v;
  constexpr int bell_numbers[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 0; n <= 6; ++n) {
    const std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
    v.require(bell::eval_bell(n, ones) == bell_numbers[n], "Bell number " + std::to_string(n));
    v.require(bell::complete_bell(n).coefficient_sum() == bell_numbers[n],
              "coefficient sum " + std::to_string(n));
  }
  const auto xs = bell::sample_rationals(10, 11U);
  const auto ys = bell::sample_rationals(10, 12U);
  for (int n = 1; n <= 10; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    v.require(bell::negation_convolution_residual(n, xs) == 0, "negation" + tag);
    v.require(bell::addition_residual(n, xs, ys) == 0, "addition" + tag);
    v.require(bell::scaling_residual(n, bell::Rational(-3, 2), xs) == 0, "scaling" + tag);
    v.require(bell::shift_residual(n, bell::Rational(5, 3), xs) == 0, "shift" + tag);
    v.require(bell::expansion_residual(n, xs) == 0, "expansion" + tag);
  }
  if (v.pass) v.detail = "all residuals exactly 0";
  return v;
}

Verdict bridge() {
  Verdict v;
  double worst = 0.0;
  for (int m = 0; m <= 6; ++m) {
    worst = std::max(worst, std::abs(gamma_moment(m).value - bell::gamma_derivative_at_one(m)));
  }
  v.require(worst <= kBridgeTol, "difference " + num(worst));
  if (v.pass) v.detail = "max difference " + num(worst);
  return v;
}

Verdict euler_and_gamma1() {
  Verdict v;
  const double rel = std::abs(alteta::euler_constant_59(60) - reference::kEuler) / reference::kEuler;
  const double g1 = std::abs(alteta::gamma1_via_alt() - gamma_hasse({1, 1.0}).value);
  v.require(rel <= kEulerRelTol, "gamma relative error " + num(rel));
  v.require(g1 <= kGamma1Tol, "gamma_1 difference " + num(g1));
  if (v.pass) v.detail = "gamma rel " + num(rel) + ", gamma_1 " + num(g1);
  return v;
}

Verdict hurwitz() {
  Verdict v;
  double worst = 0.0;
  for (double s : {-0.5, 0.5, 2.0, 3.0}) {
    for (double u : {0.5, 1.0, 2.0}) {
      const double h = hurwitz_hermite(s, u);
      const double l = hurwitz_laplace(s, u);
      worst = std::max(worst, std::abs(h - l));
      if (s > 1.0) {
        const double series = specfun::hurwitz_zeta_series(s, u);
        worst = std::max({worst, std::abs(h - series), std::abs(l - series)});
      }
    }
  }
  v.require(worst <= kHurwitzTol, "difference " + num(worst));
  if (v.pass) v.detail = "max difference " + num(worst);
  return v;
}

Verdict brede() {
  Verdict v;
  const double g = reference::kEuler;
  const auto p1 = brede_poly(1);
  const auto p2 = brede_poly(2);
  double coeff = std::abs(brede_poly(0).coefficient(0) - 1.0);
  coeff = std::max({coeff, std::abs(p1.coefficient(0) + g), std::abs(p1.coefficient(1) - 1.0)});
  coeff = std::max({coeff, std::abs(p2.coefficient(0) - (g * g - reference::kZeta2)),
                    std::abs(p2.coefficient(1) + 2.0 * g), std::abs(p2.coefficient(2) - 1.0)});
  v.require(coeff <= kBredeCoeffTol, "p_0..p_2 coefficients " + num(coeff));

  double appell = 0.0;
  for (int n = 1; n <= 10; ++n) {
    const auto d = brede_poly(n).derivative();
    const auto prev = brede_poly(n - 1);
    for (int j = 0; j < n; ++j) {
      const double want = n * prev.coefficient(j);
      appell = std::max(appell, std::abs(d.coefficient(j) - want) / std::max(1.0, std::abs(want)));
    }
  }
  v.require(appell <= kAppellTol, "Appell " + num(appell));

  double moment = 0.0;
  for (int n = 0; n <= 5; ++n) {
    const auto p = brede_poly(n);
    for (double x : {0.0, 1.0, 2.0}) {
      const auto q = quad::integrate_semiaxis([&p, x](double z) {
        const double decay = std::exp(-z);
        return decay == 0.0 ? 0.0 : p(x - std::log(z)) * decay;
      });
      moment = std::max(moment, std::abs(q.value - detail::ipow(x, n)));
    }
  }
  v.require(moment <= kBredeMomentTol, "moment " + num(moment));
  if (v.pass) {
    v.detail = "coeff " + num(coeff) + ", Appell " + num(appell) + ", moment " + num(moment);
  }
  return v;
}

Verdict closed_web() {
  Verdict v;
  double half = 0.0;
  for (int p = 0; p <= 4; ++p) {
    half = std::max(half, std::abs(alteta::gamma_half_closed(p) - gamma_hasse({p, 0.5}).value));
    half = std::max(half, std::abs(alteta::gamma_half_closed(p) - reference::kStieltjesHalf[p]));
  }
  double fractions = 0.0;
  for (int p = 0; p <= 2; ++p) {
    for (int q = 2; q <= 4; ++q) {
      const auto [closed, direct] = alteta::stieltjes_sum_over_fractions(p, q);
      fractions = std::max(fractions, std::abs(closed - direct));
    }
  }
  double shift = 0.0;
  for (int k = 0; k <= 5; ++k) shift = std::max(shift, alteta::half_shift_check(k));
  v.require(half <= kClosedWebTol, "gamma_p(1/2) " + num(half));
  v.require(fractions <= kClosedWebTol, "fractions " + num(fractions));
  v.require(shift <= kClosedWebTol, "half shift " + num(shift));
  if (v.pass) {
    v.detail = "half " + num(half) + ", fractions " + num(fractions) + ", shift " + num(shift);
  }
  return v;
}

Verdict deltas() {
  Verdict v;
  for (long m : {2L, 10L, 1000L, 1000000L}) {
    const auto d0 = delta_n(0, m);
    v.require(d0.left == 0.5 && d0.right == 0.5, "delta_0 at m=" + std::to_string(m));
  }
  const double err = std::abs(delta_n(1, 1000000).left - (0.5 * reference::kLog2Pi - 1.0));
  v.require(err <= kDeltaTol, "delta_1 error " + num(err));
  if (v.pass) v.detail = "delta_0 exact, delta_1 error " + num(err);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Verdict (*)()>> criteria = {
      {"published digits and cross-method spread", published_digits},
      {"Lerch identity", lerch},
      {"quarter integral", quarter},
      {"inversion identities", inversion},
      {"positivity of I_n", positivity},
      {"exact Bell suite", exact_bell},
      {"Gamma-derivative bridge", bridge},
      {"Euler constant and gamma_1 via alternating sums", euler_and_gamma1},
      {"Hurwitz representation consistency", hurwitz},
      {"Brede/Appell suite", brede},
      {"closed-form web for gamma_p(1/2)", closed_web},
      {"delta constants", deltas},
  };

  const auto start = Clock::now();
  int failed = 0;
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const bool known = kKnownFailures.count(id) != 0;
    if (!v.pass) {
      ++failed;
      if (!known) ++unexpected;
    }
    std::printf("criterion %2d: %s  %s  (%s)%s\n", id, v.pass ? "PASS" : "FAIL", criteria[i].first,
                v.detail.c_str(), !v.pass && known ? " [known failure, see README]" : "");
  }
  const double total = seconds_since(start);
  const bool fast = total <= kSuiteSeconds;
  std::printf("runtime: %s  %.1f s (limit %.0f s)\n", fast ? "PASS" : "FAIL", total, kSuiteSeconds);
  std::printf("%zu/%zu criteria passed, %d unexpected failure(s)\n", criteria.size() - failed,
              criteria.size(), unexpected);
  return (unexpected == 0 && fast) ? 0 : 1;
}
