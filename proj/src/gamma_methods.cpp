#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "stieltjes/bellpoly.hpp"
#include "stieltjes/detail/combinatorics.hpp"
#include "stieltjes/detail/forward_difference.hpp"
#include "stieltjes/detail/summation.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/gamma.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/moments.hpp"
#include "stieltjes/specfun.hpp"

namespace stieltjes {

namespace {

using detail::WideFloat;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// log^n u / (2u) - log^{n+1} u / (n+1), shared by every integral route.
double boundary_terms(int n, double u) {
  const double lu = std::log(u);
  return detail::ipow(lu, n) / (2.0 * u) - detail::ipow(lu, n + 1) / (n + 1);
}

void require_order(int n, int limit, const char* fn) {
  if (n < 0) throw DomainError(std::string(fn) + ": order must be nonnegative");
  if (n > limit) {
    throw CapacityError(std::string(fn) + ": order " + std::to_string(n) + " exceeds " +
                        std::to_string(limit));
  }
}

MethodResult from_quad(Method m, double head, const quad::QuadResult& q) {
  MethodResult r;
  r.method = m;
  r.value = head + q.value;
  r.error_estimate = q.error_estimate;
  r.evaluations = q.evaluations;
  r.flags.not_converged = !q.converged;
  diagnose_cancellation(r, std::max(std::abs(head), q.peak_term));
  return r;
}

const std::vector<double>& coefficient_cache() {
  static const std::vector<double> cache = [] {
    std::vector<double> args;
    args.push_back(-specfun::digamma(1.0));
    for (int p = 1; p < bell::kMaxDerivativeOrder; ++p) args.push_back(-specfun::polygamma(p, 1.0));
    return bell::eval_bell_sequence<double>(bell::kMaxDerivativeOrder, args);
  }();
  return cache;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Hasse: return "hasse";
    case Method::Coffey: return "coffey";
    case Method::BellFamily: return "bell";
    case Method::Brede: return "brede";
    case Method::Limit: return "limit";
    case Method::Hermite1: return "hermite1";
    case Method::Quadrature: return "quadrature";
  }
  return "unknown";
}

void GammaRequest::validate() const {
  if (order < 0) throw DomainError("GammaRequest: order must be nonnegative");
  if (!(u > 0.0) || !std::isfinite(u)) {
    throw DomainError("GammaRequest: u must be positive and finite, got " + std::to_string(u));
  }
}

MethodResult gamma_hasse(const GammaRequest& req, const HasseOptions& opt) {
  req.validate();
  if (opt.j_max < 2) throw ArgumentError("gamma_hasse: j_max must be at least 2");
  const int n = req.order;
  const double x = req.u;

  MethodResult r;
  r.method = Method::Hasse;
  r.flags.precision_warning = n > kTestedMaxOrder;

  // γ_n(x) = γ_n(x+m) + Σ_{j<m} log^n(x+j)/(x+j)
  const int m = (opt.shift > 0 && x < opt.shift) ? opt.shift : 0;
  WideFloat shifted = 0;
  double peak = 0.0;
  for (int j = 0; j < m; ++j) {
    const WideFloat a = WideFloat(x) + j;
    const WideFloat term = detail::wide_pow(log(a), n) / a;
    shifted += term;
    peak = std::max(peak, std::abs(term.convert_to<double>()));
  }

  // γ_n(X) = -1/(n+1) Σ_j 1/(j+1) Σ_k C(j,k) (-1)^k log^{n+1}(X+k).
  const WideFloat base = WideFloat(x) + m;
  detail::AlternatingDifferences table(static_cast<std::size_t>(opt.j_max));
  WideFloat series = 0;
  double last = 0.0;
  double before_last = 0.0;
  int quiet = 0;
  for (int j = 0; j <= opt.j_max; ++j) {
    const WideFloat term = table.push(detail::wide_pow(log(base + j), n + 1)) / (j + 1);
    series += term;
    ++r.evaluations;
    const double scaled = term.convert_to<double>() / (n + 1);
    peak = std::max(peak, std::abs(scaled));
    before_last = last;
    last = scaled;
    quiet = (std::abs(scaled) < opt.tol / 10.0) ? quiet + 1 : 0;
    if (j >= 2 && quiet >= 2) break;
  }
  r.flags.not_converged = quiet < 2;

  r.value = (shifted - series / (n + 1)).convert_to<double>();
  r.error_estimate = std::abs(last) + std::abs(before_last) + kEps * std::abs(r.value);
  diagnose_cancellation(r, peak);
  return r;
}

MethodResult gamma_coffey(const GammaRequest& req, const quad::QuadConfig& cfg) {
  req.validate();
  const int n = req.order;
  const double u = req.u;
  // i[(u-ix)L - (u+ix)conj(L)] = -2 Im[(u-ix)L], L = log^n(u+ix); principal branch, Re > 0.
  const auto q = quad::integrate_semiaxis(
      [n, u](double x) {
        const double w = kernels::plana_weight(x);
        if (w == 0.0) return 0.0;
        const std::complex<double> z(u, x);
        const std::complex<double> log_z = std::log(z);
        std::complex<double> power(1.0, 0.0);
        for (int k = 0; k < n; ++k) power *= log_z;
        const double numer = -2.0 * (std::conj(z) * power).imag();
        return numer / (u * u + x * x) * w;
      },
      cfg);
  auto r = from_quad(Method::Coffey, boundary_terms(n, u), q);
  r.flags.precision_warning = n > kTestedMaxOrder;
  return r;
}

MethodResult gamma1_hermite(double u, const quad::QuadConfig& cfg) {
  GammaRequest{1, u}.validate();
  const auto log_part = quad::integrate_semiaxis(
      [u](double x) {
        const double w = kernels::plana_weight(x);
        if (w == 0.0) return 0.0;
        const double r2 = u * u + x * x;
        return x * std::log(r2) / r2 * w;
      },
      cfg);
  const auto atan_part = quad::integrate_semiaxis(
      [u](double x) {
        const double w = kernels::plana_weight(x);
        if (w == 0.0) return 0.0;
        return std::atan(x / u) / (u * u + x * x) * w;
      },
      cfg);
  MethodResult r;
  r.method = Method::Hermite1;
  const double head = boundary_terms(1, u);
  r.value = head + log_part.value - 2.0 * u * atan_part.value;
  r.error_estimate = log_part.error_estimate + 2.0 * u * atan_part.error_estimate;
  r.evaluations = log_part.evaluations + atan_part.evaluations;
  r.flags.not_converged = !log_part.converged || !atan_part.converged;
  diagnose_cancellation(r, std::max({std::abs(head), log_part.peak_term, 2.0 * u * atan_part.peak_term}));
  return r;
}

std::vector<double> bell_family_coefficients(int k_max) {
  require_order(k_max, bell::kMaxDerivativeOrder, "bell_family_coefficients");
  const auto& c = coefficient_cache();
  return {c.begin(), c.begin() + k_max + 1};
}

MethodResult gamma_bell_family(const GammaRequest& req, const quad::QuadConfig& cfg,
                               BellKernel kernel) {
  req.validate();
  const int n = req.order;
  require_order(n, bell::kMaxDerivativeOrder, "gamma_bell_family");
  if (kernel != BellKernel::WithHalf && (req.u != 1.0 || n == 0)) {
    throw ArgumentError("gamma_bell_family: the half-free kernels need u = 1 and n >= 1");
  }
  const auto c = bell_family_coefficients(n);

  MethodResult r;
  r.method = Method::BellFamily;
  const double head = boundary_terms(n, req.u);
  detail::CompensatedSum sum;
  bool converged = true;
  for (int k = 0; k <= n; ++k) {
    quad::QuadResult q;
    switch (kernel) {
      case BellKernel::WithHalf: q = binet_moment(n - k, req.u, cfg); break;
      case BellKernel::WithoutHalf: q = bose_moment(n - k, cfg); break;
      case BellKernel::Coppo: q = coppo_moment(n - k, cfg); break;
    }
    const double weight = detail::binomial(n, k) * c[static_cast<std::size_t>(k)];
    sum += weight * q.value;
    r.error_estimate += std::abs(weight) * q.error_estimate;
    r.evaluations += q.evaluations;
    converged = converged && q.converged;
  }
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  r.value = head + sign * sum.value();
  r.flags.not_converged = !converged;
  diagnose_cancellation(r, std::max(std::abs(head), sum.peak()));
  return r;
}

RealPolynomial brede_poly(int n) {
  require_order(n, bell::kMaxDerivativeOrder, "brede_poly");
  const auto c = bell_family_coefficients(n);
  std::vector<double> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    coeffs[static_cast<std::size_t>(n - k)] = detail::binomial(n, k) * sign * c[static_cast<std::size_t>(k)];
  }
  return RealPolynomial(std::move(coeffs));
}

MethodResult gamma_brede(int n, const quad::QuadConfig& cfg) {
  require_order(n, 10, "gamma_brede");
  const RealPolynomial p = brede_poly(n);
  // t = e^{-v} turns ∫_0^1 p_n(-log log(1/t)) [1/log t + 1/(1-t)] dt into a
  // semi-axis integral that never evaluates log log(1/t) at t = 1.
  const auto q = quad::integrate_semiaxis(
      [&p](double v) {
        const double decay = std::exp(-v);
        if (decay == 0.0) return 0.0;
        return p(-std::log(v)) * decay * kernels::coppo_bracket(v);
      },
      cfg);
  return from_quad(Method::Brede, 0.0, q);
}

MethodResult gamma_limit(int n, long r, bool corrected) {
  require_order(n, 8, "gamma_limit");
  if (r < 10) throw ArgumentError("gamma_limit: r must be at least 10");

  auto finish = [n, corrected](double partial, long upto) {
    const double lr = std::log(static_cast<double>(upto));
    double s = partial - detail::ipow(lr, n + 1) / (n + 1);
    if (corrected) s -= detail::ipow(lr, n) / (2.0 * static_cast<double>(upto));
    return s;
  };

  const long half = r / 2;
  detail::CompensatedSum sum;
  double at_half = 0.0;
  for (long m = 1; m <= r; ++m) {
    const double dm = static_cast<double>(m);
    sum += detail::ipow(std::log(dm), n) / dm;
    if (m == half) at_half = finish(sum.value(), half);
  }
  MethodResult res;
  res.method = Method::Limit;
  res.value = finish(sum.value(), r);
  res.error_estimate = std::abs(res.value - at_half);
  res.evaluations = static_cast<std::size_t>(r);
  diagnose_cancellation(res, sum.peak());
  return res;
}

}  // namespace stieltjes
