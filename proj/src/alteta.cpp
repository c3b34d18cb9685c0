#include "stieltjes/alteta.hpp"

#include <cmath>
#include <string>

#include "stieltjes/constants.hpp"
#include "stieltjes/detail/combinatorics.hpp"
#include "stieltjes/detail/forward_difference.hpp"
#include "stieltjes/detail/summation.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/gamma.hpp"
#include "stieltjes/identities.hpp"
#include "stieltjes/specfun.hpp"

namespace stieltjes::alteta {

namespace {

constexpr double kHasseWindow = 1e-2;
constexpr int kSeriesTerms = 40;

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": x must be positive, got " + std::to_string(x));
  }
}

void require_range(int v, int lo, int hi, const char* fn, const char* what) {
  if (v < lo || v > hi) {
    throw CapacityError(std::string(fn) + ": " + what + " must be in " + std::to_string(lo) +
                        ".." + std::to_string(hi));
  }
}

double stieltjes_value(int k, double u) { return gamma_hasse({k, u}).value; }

double sign_of(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

void AltZetaRequest::validate() const {
  require_positive(x, "AltZetaRequest");
  if (!std::isfinite(s)) throw DomainError("AltZetaRequest: s must be finite");
  require_range(order, 0, kMaxOrder, "AltZetaRequest", "order");
}

double alt_zeta(double s, double x, const quad::QuadConfig& cfg) {
  require_positive(x, "alt_zeta");
  if (s == 1.0) return 0.5 * (specfun::digamma(0.5 * (1.0 + x)) - specfun::digamma(0.5 * x));
  if (std::abs(s - 1.0) < kHasseWindow) return alt_zeta_hasse(s, x, 0);
  const double scale = std::exp2(-s);
  if (s > 1.0) {
    return scale * (specfun::hurwitz_zeta_series(s, 0.5 * x) -
                    specfun::hurwitz_zeta_series(s, 0.5 * (1.0 + x)));
  }
  return scale * (hurwitz_hermite(s, 0.5 * x, cfg) - hurwitz_hermite(s, 0.5 * (1.0 + x), cfg));
}

double alt_zeta_series(double s, double x) {
  require_positive(x, "alt_zeta_series");
  if (!(s > 0.0)) throw DomainError("alt_zeta_series: requires s > 0");
  // Cohen, Rodriguez Villegas and Zagier, algorithm 1.
  const double n = kSeriesTerms;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  detail::CompensatedSum sum;
  for (int k = 0; k < kSeriesTerms; ++k) {
    c = b - c;
    sum += c * std::pow(x + k, -s);
    b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
  }
  return sum.value() / d;
}

double alt_zeta_hasse(const AltZetaRequest& req, const AltHasseOptions& opt) {
  req.validate();
  if (opt.max_outer < 1) throw ArgumentError("alt_zeta_hasse: max_outer must be positive");
  const detail::WideFloat s = req.s;
  detail::AlternatingDifferences table(static_cast<std::size_t>(opt.max_outer));
  detail::WideFloat sum = 0;
  detail::WideFloat weight = 0.5;
  int quiet = 0;
  for (int i = 0; i <= opt.max_outer; ++i) {
    const detail::WideFloat a = detail::WideFloat(req.x) + i;
    const detail::WideFloat term = weight * table.push(detail::wide_pow(log(a), req.order) / pow(a, s));
    sum += term;
    weight /= 2;
    quiet = (abs(term) < opt.tol) ? quiet + 1 : 0;
    if (quiet >= 2) break;
  }
  return sum.convert_to<double>();
}

double alt_zeta_hasse(double s, double x, int n, const AltHasseOptions& opt) {
  return alt_zeta_hasse(AltZetaRequest{s, x, n}, opt);
}

std::pair<double, double> alt_deriv_at_1(int n, double x) {
  require_range(n, 0, 4, "alt_deriv_at_1", "n");
  require_positive(x, "alt_deriv_at_1");
  const double log2 = constants().log2;
  detail::CompensatedSum sum;
  for (int k = 0; k <= n; ++k) {
    const double diff = stieltjes_value(k, 0.5 * x) - stieltjes_value(k, 0.5 * (1.0 + x));
    sum += detail::binomial(n, k) * detail::ipow(log2, n - k) * diff;
  }
  const double sign = sign_of(n);
  return {sign * 0.5 * sum.value(), sign * alt_zeta_hasse(1.0, x, n)};
}

double euler_constant_59(int max_outer) {
  if (max_outer < 0) throw ArgumentError("euler_constant_59: max_outer must be nonnegative");
  AltHasseOptions opt;
  opt.max_outer = max_outer;
  const double log2 = constants().log2;
  return 0.5 * log2 - alt_zeta_hasse(1.0, 1.0, 1, opt) / log2;
}

double gamma1_via_alt() {
  const double log2 = constants().log2;
  const double s1 = alt_zeta_hasse(1.0, 1.0, 1);
  const double s2 = alt_zeta_hasse(1.0, 1.0, 2);
  return -log2 * log2 / 12.0 + 0.5 * s1 - s2 / (2.0 * log2);
}

double gamma_half_closed(int p) {
  require_range(p, 0, 6, "gamma_half_closed", "p");
  const double log2 = constants().log2;
  detail::CompensatedSum sum;
  sum += -stieltjes_value(p, 1.0);
  sum += 2.0 * sign_of(p) * detail::ipow(log2, p + 1) / (p + 1);
  for (int j = 0; j <= p; ++j) {
    sum += 2.0 * detail::binomial(p, j) * sign_of(j) * stieltjes_value(p - j, 1.0) *
           detail::ipow(log2, j);
  }
  return sum.value();
}

std::pair<double, double> stieltjes_sum_over_fractions(int p, int q) {
  require_range(p, 0, 4, "stieltjes_sum_over_fractions", "p");
  require_range(q, 2, 6, "stieltjes_sum_over_fractions", "q");
  const double dq = q;
  const double lq = std::log(dq);
  detail::CompensatedSum closed;
  closed += -stieltjes_value(p, 1.0);
  closed += dq * sign_of(p) * detail::ipow(lq, p + 1) / (p + 1);
  for (int j = 0; j <= p; ++j) {
    closed += dq * detail::binomial(p, j) * sign_of(j) * stieltjes_value(p - j, 1.0) *
              detail::ipow(lq, j);
  }
  detail::CompensatedSum direct;
  for (int r = 1; r < q; ++r) direct += stieltjes_value(p, r / dq);
  return {closed.value(), direct.value()};
}

double half_shift_check(int k) {
  require_range(k, 0, 5, "half_shift_check", "k");
  const double expected = -sign_of(k) * 2.0 * detail::ipow(constants().log2, k);
  return std::abs(stieltjes_value(k, 1.5) - stieltjes_value(k, 0.5) - expected);
}

}  // namespace stieltjes::alteta
