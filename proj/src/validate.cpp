#include "stieltjes/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <functional>
#include <limits>
#include <sstream>

#include "stieltjes/alteta.hpp"
#include "stieltjes/bell_identities.hpp"
#include "stieltjes/bellpoly.hpp"
#include "stieltjes/constants.hpp"
#include "stieltjes/detail/combinatorics.hpp"
#include "stieltjes/gamma.hpp"
#include "stieltjes/identities.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/moments.hpp"
#include "stieltjes/specfun.hpp"

namespace stieltjes::validate {

namespace {

using Inputs = std::vector<std::pair<std::string, double>>;

struct Outcome {
  double left = 0.0;
  double right = 0.0;
  std::size_t evaluations = 0;
  ResultFlags flags;
  /// Inequality check: passes when left > right.
  bool strict_greater = false;
};

Outcome from(const MethodResult& a, const MethodResult& b) {
  Outcome o{a.value, b.value, a.evaluations + b.evaluations, a.flags};
  o.flags.not_converged = a.flags.not_converged || b.flags.not_converged;
  o.flags.cancellation = a.flags.cancellation || b.flags.cancellation;
  o.flags.precision_warning = a.flags.precision_warning || b.flags.precision_warning;
  return o;
}

Outcome from(const MethodResult& a, double right) {
  return {a.value, right, a.evaluations, a.flags};
}

Outcome from(const TwoSided& t) { return {t.left, t.right, t.evaluations, {}}; }

Outcome from(const quad::QuadResult& q, double right) {
  Outcome o{q.value, right, q.evaluations, {}};
  o.flags.not_converged = !q.converged;
  return o;
}

Outcome exact(const bell::Rational& residual) {
  return {std::abs(residual.convert_to<double>()), 0.0, 0, {}};
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string indexed(const std::string& base, std::initializer_list<double> idx) {
  std::string out = base + "[";
  bool first = true;
  for (double v : idx) {
    if (!first) out += ",";
    out += fmt(v);
    first = false;
  }
  return out + "]";
}

class Collector {
 public:
  Collector(std::string suite, const ValidationOptions& opt, std::vector<CheckRecord>& out)
      : suite_(std::move(suite)), opt_(opt), out_(out) {}

  const quad::QuadConfig& cfg() const { return opt_.quad; }

  void check(std::string id, Inputs inputs, double tolerance, const std::function<Outcome()>& fn) {
    CheckRecord rec;
    rec.id = std::move(id);
    rec.suite = suite_;
    rec.inputs = std::move(inputs);
    rec.tolerance = opt_.tolerance.value_or(tolerance);
    try {
      const Outcome o = fn();
      rec.left = o.left;
      rec.right = o.right;
      rec.evaluations = o.evaluations;
      rec.flags = o.flags;
      if (o.strict_greater) {
        rec.difference = o.left > o.right ? 0.0 : std::max(o.right - o.left, kTiny);
      } else {
        rec.difference = std::abs(o.left - o.right);
      }
      rec.pass = std::isfinite(rec.difference) && rec.difference <= rec.tolerance &&
                 !rec.flags.not_converged;
    } catch (const std::exception& e) {
      rec.error = true;
      rec.message = e.what();
      rec.difference = std::numeric_limits<double>::quiet_NaN();
      rec.pass = false;
    }
    out_.push_back(std::move(rec));
  }

 private:
  static constexpr double kTiny = std::numeric_limits<double>::denorm_min();

  std::string suite_;
  const ValidationOptions& opt_;
  std::vector<CheckRecord>& out_;
};

constexpr double kHalfGrid[] = {0.5, 1.0, 1.5, 2.0};

void bell_suite(Collector& c) {
  constexpr int kBellNumbers[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 0; n <= 6; ++n) {
    c.check(indexed("bell.bell_number", {double(n)}), {{"n", n}}, 0.0, [n, &kBellNumbers] {
      const std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
      return Outcome{bell::eval_bell(n, ones), double(kBellNumbers[n]), 0, {}};
    });
  }
  for (int n = 0; n <= 6; ++n) {
    c.check(indexed("bell.coefficient_sum", {double(n)}), {{"n", n}}, 0.0, [n, &kBellNumbers] {
      return Outcome{bell::complete_bell(n).coefficient_sum().convert_to<double>(),
                     double(kBellNumbers[n]), 0, {}};
    });
  }
  const auto xs = bell::sample_rationals(12, 20240601U);
  const auto ys = bell::sample_rationals(12, 20240602U);
  const bell::Rational a(-3, 2);
  const bell::Rational alpha(5, 3);
  for (int n = 1; n <= 10; ++n) {
    const Inputs in{{"n", n}};
    c.check(indexed("bell.recurrence_vs_expansion", {double(n)}), in, 0.0,
            [&, n] { return exact(bell::expansion_residual(n, xs)); });
    c.check(indexed("bell.negation_convolution", {double(n)}), in, 0.0,
            [&, n] { return exact(bell::negation_convolution_residual(n, xs)); });
    c.check(indexed("bell.addition", {double(n)}), in, 0.0,
            [&, n] { return exact(bell::addition_residual(n, xs, ys)); });
    c.check(indexed("bell.scaling", {double(n)}), in, 0.0,
            [&, n] { return exact(bell::scaling_residual(n, a, xs)); });
    c.check(indexed("bell.shift", {double(n)}), in, 0.0,
            [&, n] { return exact(bell::shift_residual(n, alpha, xs)); });
  }
  for (int m = 0; m <= 6; ++m) {
    c.check(indexed("bell.gamma_derivative_quadrature", {double(m)}), {{"m", m}}, 1e-8,
            [&c, m] { return from(gamma_moment(m, c.cfg()), bell::gamma_derivative_at_one(m)); });
  }
  const auto& k = constants();
  c.check("bell.gamma_derivative[2]", {{"m", 2}}, 1e-13, [&k] {
    return Outcome{bell::gamma_derivative_at_one(2), k.zeta(2) + k.euler * k.euler, 0, {}};
  });
  c.check("bell.inv_gamma_derivative[2]", {{"k", 2}}, 1e-13, [&k] {
    return Outcome{bell::inv_gamma_derivative_at_zero(2), k.euler * k.euler - k.zeta(2), 0, {}};
  });
}

void quad_suite(Collector& c) {
  const auto& k = constants();
  c.check("quad.finite_constant", {}, 1e-14, [&c] {
    return from(quad::integrate_finite([](double) { return 1.0; }, 0.0, 1.0, c.cfg()), 1.0);
  });
  for (int degree = 0; degree <= 3; ++degree) {
    c.check(indexed("quad.finite_monomial", {double(degree)}), {{"degree", degree}}, 1e-14,
            [&c, degree] {
              return from(quad::integrate_finite(
                              [degree](double x) { return detail::ipow(x, degree); }, -1.0, 2.0,
                              c.cfg()),
                          (detail::ipow(2.0, degree + 1) - detail::ipow(-1.0, degree + 1)) /
                              (degree + 1));
            });
  }
  c.check("quad.euler_log_integral", {}, 1e-10, [&c, &k] {
    return from(quad::integrate_finite(
                    [](double t) { return 1.0 / std::log(t) + 1.0 / (1.0 - t); }, 0.0, 1.0,
                    c.cfg()),
                k.euler);
  });
  c.check("quad.loglog_integral", {}, 1e-8, [&c, &k] {
    const double g1 = gamma_hasse({1, 1.0}).value;
    return from(quad::integrate_finite(
                    [](double t) {
                      return std::log(-std::log(t)) * (1.0 / std::log(t) + 1.0 / (1.0 - t));
                    },
                    0.0, 1.0, c.cfg()),
                -g1 - k.euler * k.euler);
  });
  c.check("quad.semiaxis_exp", {}, 1e-13, [&c] {
    return from(quad::integrate_semiaxis([](double v) { return std::exp(-v); }, c.cfg()), 1.0);
  });
  c.check("quad.binet_gamma_minus_half", {}, 1e-12, [&c, &k] {
    return from(binet_moment(0, 1.0, c.cfg()), k.euler - 0.5);
  });
  c.check("quad.quarter_integral", {}, 1e-10,
          [&c] { return from(quarter_integral(c.cfg()), 0.25); });
  for (double t : {0.5, 1.0, 5.0}) {
    c.check(indexed("quad.legendre_relation", {t}), {{"t", t}}, 1e-8,
            [&c, t] { return Outcome{quad::legendre_relation_check(t, c.cfg()), 0.0, 0, {}}; });
  }
  for (auto [u, x] : {std::pair{1.0, 0.0}, std::pair{1.0, 1.0}, std::pair{2.0, 1.0}}) {
    c.check(indexed("quad.atan_laplace", {u, x}), {{"u", u}, {"x", x}}, 1e-9,
            [&c, u, x] { return Outcome{quad::atan_laplace_check(u, x, c.cfg()), 0.0, 0, {}}; });
  }
  for (int n = 0; n <= 8; ++n) {
    c.check(indexed("quad.endpoint_log_power", {double(n)}), {{"n", n}}, 0.0, [&c, n] {
      const auto q = binet_moment(n, 1.0, c.cfg());
      Outcome o{q.converged ? 1.0 : 0.0, 1.0, q.evaluations, {}};
      return o;
    });
  }
}

void stieltjes_suite(Collector& c) {
  const auto& k = constants();
  const auto& cfg = c.cfg();

  // Base special functions.
  for (double x : {1e-3, 0.5, 1.0, 7.5, 1e3}) {
    c.check(indexed("specfun.digamma_shift", {x}), {{"x", x}}, 1e-12, [x] {
      return Outcome{specfun::digamma(x + 1.0) - specfun::digamma(x), 1.0 / x, 0, {}};
    });
  }
  c.check("specfun.log_gamma_half", {{"x", 0.5}}, 1e-15,
          [&k] { return Outcome{specfun::log_gamma(0.5), 0.5 * k.log_pi, 0, {}}; });
  for (double s : {1.5, 2.0, 3.0, 7.0}) {
    c.check(indexed("specfun.hurwitz_half", {s}), {{"s", s}}, 1e-12, [s] {
      const double z1 = specfun::hurwitz_zeta_series(s, 1.0);
      return Outcome{specfun::hurwitz_zeta_series(s, 0.5) / z1, std::exp2(s) - 1.0, 0, {}};
    });
  }

  // Paper digits, truncated toward zero at four decimals.
  constexpr double kPrinted[] = {0.5772, -0.0728, -0.0096};
  auto truncated = [](double v) { return std::trunc(v * 1e4) / 1e4; };
  for (int n = 0; n <= 2; ++n) {
    const Inputs in{{"n", n}, {"u", 1.0}};
    auto digits = [&](const char* name, const std::function<MethodResult()>& fn) {
      c.check(indexed(std::string("gamma.published_digits.") + name, {double(n)}), in, 1e-12, [&] {
        const auto r = fn();
        Outcome o = from(r, kPrinted[n]);
        o.left = truncated(r.value);
        return o;
      });
    };
    digits("hasse", [n] { return gamma_hasse({n, 1.0}); });
    digits("coffey", [&] { return gamma_coffey({n, 1.0}, cfg); });
    digits("bell", [&] { return gamma_bell_family({n, 1.0}, cfg); });
    digits("brede", [&] { return gamma_brede(n, cfg); });
    digits("limit", [n] { return gamma_limit(n, 1000000); });
    if (n == 1) digits("hermite1", [&] { return gamma1_hermite(1.0, cfg); });
  }

  // Cross-method agreement.
  for (int n = 0; n <= 5; ++n) {
    for (double u : kHalfGrid) {
      const Inputs in{{"n", n}, {"u", u}};
      c.check(indexed("gamma.hasse_vs_coffey", {double(n), u}), in, 1e-8,
              [&, n, u] { return from(gamma_hasse({n, u}), gamma_coffey({n, u}, cfg)); });
      c.check(indexed("gamma.coffey_vs_bell", {double(n), u}), in, 1e-8, [&, n, u] {
        return from(gamma_coffey({n, u}, cfg), gamma_bell_family({n, u}, cfg));
      });
    }
    c.check(indexed("gamma.brede_vs_coffey", {double(n)}), {{"n", n}}, 1e-8,
            [&, n] { return from(gamma_brede(n, cfg), gamma_coffey({n, 1.0}, cfg)); });
  }
  for (int n = 0; n <= 3; ++n) {
    c.check(indexed("gamma.method_spread", {double(n)}), {{"n", n}, {"u", 1.0}}, 1e-8, [&, n] {
      const MethodResult rs[] = {gamma_hasse({n, 1.0}), gamma_coffey({n, 1.0}, cfg),
                                 gamma_bell_family({n, 1.0}, cfg), gamma_brede(n, cfg)};
      Outcome o{rs[0].value, rs[0].value, 0, {}};
      for (const auto& r : rs) {
        o.left = std::max(o.left, r.value);
        o.right = std::min(o.right, r.value);
        o.evaluations += r.evaluations;
        o.flags.not_converged = o.flags.not_converged || r.flags.not_converged;
      }
      return o;
    });
  }
  for (double u : {0.5, 1.0, 2.0}) {
    c.check(indexed("gamma.hermite1_vs_hasse", {u}), {{"u", u}}, 1e-8,
            [&, u] { return from(gamma1_hermite(u, cfg), gamma_hasse({1, u})); });
  }
  c.check("gamma.limit[0]", {{"n", 0}, {"r", 1e6}}, 1e-9,
          [] { return from(gamma_limit(0, 1000000), gamma_hasse({0, 1.0})); });
  c.check("gamma.limit[1]", {{"n", 1}, {"r", 1e6}}, 1e-7,
          [] { return from(gamma_limit(1, 1000000), gamma_hasse({1, 1.0})); });
  for (int n = 1; n <= 5; ++n) {
    c.check(indexed("gamma.half_kernel_equivalence", {double(n)}), {{"n", n}}, 1e-10, [&, n] {
      return from(gamma_bell_family({n, 1.0}, cfg, BellKernel::WithHalf),
                  gamma_bell_family({n, 1.0}, cfg, BellKernel::WithoutHalf));
    });
    c.check(indexed("gamma.coppo_kernel", {double(n)}), {{"n", n}}, 1e-10, [&, n] {
      return from(gamma_bell_family({n, 1.0}, cfg, BellKernel::Coppo),
                  gamma_bell_family({n, 1.0}, cfg, BellKernel::WithHalf));
    });
  }
  for (double u : kHalfGrid) {
    c.check(indexed("gamma.digamma", {u}), {{"u", u}}, 1e-10,
            [u] { return from(gamma_hasse({0, u}), -specfun::digamma(u)); });
  }
  for (int kk = 0; kk <= 4; ++kk) {
    for (double x : {0.5, 1.0, 2.0}) {
      c.check(indexed("gamma.shift_identity", {double(kk), x}), {{"k", kk}, {"x", x}}, 1e-8,
              [kk, x] {
                const auto a = gamma_hasse({kk, 1.0 + x});
                const auto b = gamma_hasse({kk, x});
                Outcome o = from(a, b);
                o.left = a.value + detail::ipow(std::log(x), kk) / x;
                return o;
              });
    }
  }

  // Brede polynomials.
  c.check("brede.p1", {}, 1e-12, [&k] {
    const auto p = brede_poly(1);
    return Outcome{std::abs(p.coefficient(0) + k.euler) + std::abs(p.coefficient(1) - 1.0), 0.0,
                   0, {}};
  });
  c.check("brede.p2", {}, 1e-12, [&k] {
    const auto p = brede_poly(2);
    const double g = k.euler;
    return Outcome{std::abs(p.coefficient(0) - (g * g - k.zeta(2))) +
                       std::abs(p.coefficient(1) + 2.0 * g) + std::abs(p.coefficient(2) - 1.0),
                   0.0, 0, {}};
  });
  for (int n = 1; n <= 10; ++n) {
    c.check(indexed("brede.appell", {double(n)}), {{"n", n}}, 1e-12, [n] {
      const auto d = brede_poly(n).derivative();
      const auto prev = brede_poly(n - 1);
      double worst = 0.0;
      for (int j = 0; j < n; ++j) {
        const double want = n * prev.coefficient(j);
        const double scale = std::max(1.0, std::abs(want));
        worst = std::max(worst, std::abs(d.coefficient(j) - want) / scale);
      }
      return Outcome{worst, 0.0, 0, {}};
    });
  }
  for (int n = 0; n <= 5; ++n) {
    for (double x : {0.0, 1.0, 2.0}) {
      c.check(indexed("brede.moment", {double(n), x}), {{"n", n}, {"x", x}}, 1e-8, [&, n, x] {
        const auto p = brede_poly(n);
        const auto q = quad::integrate_semiaxis(
            [&p, x](double z) {
              const double decay = std::exp(-z);
              return decay == 0.0 ? 0.0 : p(x - std::log(z)) * decay;
            },
            cfg);
        return from(q, detail::ipow(x, n));
      });
    }
  }
}

void alteta_suite(Collector& c) {
  const auto& k = constants();
  const auto& cfg = c.cfg();
  c.check("alteta.alt_zeta[1,1]", {{"s", 1.0}, {"x", 1.0}}, 1e-14,
          [&] { return Outcome{alteta::alt_zeta(1.0, 1.0, cfg), k.log2, 0, {}}; });
  c.check("alteta.alt_zeta[2,1]", {{"s", 2.0}, {"x", 1.0}}, 1e-13,
          [&] { return Outcome{alteta::alt_zeta(2.0, 1.0, cfg), k.zeta(2) / 2.0, 0, {}}; });
  c.check("alteta.alt_zeta[0.5,1]", {{"s", 0.5}, {"x", 1.0}}, 1e-10, [&] {
    return Outcome{alteta::alt_zeta(0.5, 1.0, cfg), alteta::alt_zeta_series(0.5, 1.0), 0, {}};
  });
  for (double s : {1.5, 2.0, 3.0}) {
    for (double x : {0.5, 1.0, 2.0}) {
      c.check(indexed("alteta.parity", {s, x}), {{"s", s}, {"x", x}}, 1e-10, [&, s, x] {
        return Outcome{alteta::alt_zeta(s, x, cfg), alteta::alt_zeta_series(s, x), 0, {}};
      });
    }
  }
  c.check("alteta.hasse[1,1,0]", {{"s", 1.0}, {"x", 1.0}, {"n", 0}}, 1e-14,
          [&] { return Outcome{alteta::alt_zeta_hasse(1.0, 1.0, 0), k.log2, 0, {}}; });
  c.check("alteta.hasse[1,2,0]", {{"s", 1.0}, {"x", 2.0}, {"n", 0}}, 1e-14,
          [&] { return Outcome{alteta::alt_zeta_hasse(1.0, 2.0, 0), 1.0 - k.log2, 0, {}}; });
  c.check("alteta.hasse[1,1,1]", {{"s", 1.0}, {"x", 1.0}, {"n", 1}}, 1e-10, [&] {
    const double g1 = gamma_hasse({1, 1.0}).value;
    const double g1_half = gamma_hasse({1, 0.5}).value;
    return Outcome{alteta::alt_zeta_hasse(1.0, 1.0, 1), k.log2 * k.log2 + 0.5 * (g1_half - g1),
                   0, {}};
  });
  for (int n = 0; n <= 4; ++n) {
    for (double x : {1.0, 2.0}) {
      const double tol = n <= 1 ? 1e-7 : 1e-6;
      c.check(indexed("alteta.deriv_at_1", {double(n), x}), {{"n", n}, {"x", x}}, tol, [n, x] {
        const auto [stieltjes_form, hasse_form] = alteta::alt_deriv_at_1(n, x);
        return Outcome{stieltjes_form, hasse_form, 0, {}};
      });
    }
  }
  c.check("alteta.eta_prime_1", {}, 1e-10, [&] {
    return Outcome{alteta::alt_deriv_at_1(1, 1.0).first,
                   k.euler * k.log2 - 0.5 * k.log2 * k.log2, 0, {}};
  });
  c.check("alteta.euler_constant[60]", {{"max_outer", 60}}, 5e-9 * k.euler,
          [&] { return Outcome{alteta::euler_constant_59(60), k.euler, 0, {}}; });
  c.check("alteta.euler_constant[10]", {{"max_outer", 10}}, 1e-3,
          [&] { return Outcome{alteta::euler_constant_59(10), k.euler, 0, {}}; });
  c.check("alteta.gamma1_via_alt", {}, 1e-7,
          [] { return from(gamma_hasse({1, 1.0}), alteta::gamma1_via_alt()); });
  for (int p = 0; p <= 4; ++p) {
    c.check(indexed("alteta.gamma_half_closed", {double(p)}), {{"p", p}}, 1e-7,
            [p] { return from(gamma_hasse({p, 0.5}), alteta::gamma_half_closed(p)); });
  }
  c.check("alteta.gamma1_half_closed_form", {}, 1e-10, [&] {
    const double g1 = gamma_hasse({1, 1.0}).value;
    return Outcome{alteta::gamma_half_closed(1), g1 - k.log2 * k.log2 - 2.0 * k.euler * k.log2,
                   0, {}};
  });
  for (int p = 0; p <= 2; ++p) {
    for (int q = 2; q <= 4; ++q) {
      c.check(indexed("alteta.sum_over_fractions", {double(p), double(q)}),
              {{"p", p}, {"q", q}}, 1e-7, [p, q] {
                const auto [closed, direct] = alteta::stieltjes_sum_over_fractions(p, q);
                return Outcome{closed, direct, 0, {}};
              });
    }
  }
  for (int kk = 0; kk <= 5; ++kk) {
    c.check(indexed("alteta.half_shift", {double(kk)}), {{"k", kk}}, 1e-7,
            [kk] { return Outcome{alteta::half_shift_check(kk), 0.0, 0, {}}; });
  }
}

void identities_suite(Collector& c) {
  const auto& k = constants();
  const auto& cfg = c.cfg();
  for (double u : {0.25, 0.5, 1.0, 2.0, 5.0}) {
    c.check(indexed("identities.lerch", {u}), {{"u", u}}, 1e-9, [&, u] {
      return Outcome{zeta_prime0(u, cfg), specfun::log_gamma(u) - 0.5 * k.log_2pi, 0, {}};
    });
  }
  c.check("identities.zeta_prime_0", {}, 1e-9,
          [&] { return Outcome{zeta_prime0(1.0, cfg), -0.5 * k.log_2pi, 0, {}}; });
  c.check("identities.zeta_prime_0_half", {}, 1e-9,
          [&] { return Outcome{zeta_prime0(0.5, cfg), -0.5 * k.log2, 0, {}}; });
  c.check("identities.quarter_integral", {}, 1e-10,
          [&] { return from(quarter_integral(cfg), 0.25); });
  for (int n = 0; n <= 6; ++n) {
    for (double u : {0.5, 1.0, 2.0}) {
      c.check(indexed("identities.inversion", {double(n), u}), {{"n", n}, {"u", u}}, 1e-7,
              [&, n, u] { return from(inversion_sum(n, u, cfg)); });
    }
  }
  {
    const double g = k.euler;
    const double g1 = gamma_hasse({1, 1.0}).value;
    const double g2 = gamma_hasse({2, 1.0}).value;
    const double closed[] = {g - 0.5, -g * g - g1 + 0.5 * g,
                             (g - 0.5) * (g * g + k.zeta(2)) + 2.0 * g * g1 + g2};
    for (int n = 0; n <= 2; ++n) {
      c.check(indexed("identities.inversion_closed_form", {double(n)}), {{"n", n}}, 1e-7,
              [&, n] { return from(binet_moment(n, 1.0, cfg), closed[n]); });
    }
  }
  for (int n = 0; n <= 6; ++n) {
    c.check(indexed("identities.a_coefficient", {double(n)}), {{"n", n}}, 1e-8,
            [&, n] { return from(a_coefficient(n, cfg)); });
  }
  for (int n = 0; n <= 12; ++n) {
    c.check(indexed("identities.positivity", {double(n)}), {{"n", n}}, 0.0, [&, n] {
      const auto r = i_n_integral(n, cfg);
      Outcome o{r.value, r.error_estimate, r.evaluations, r.flags};
      o.strict_greater = true;
      return o;
    });
  }
  for (double u : {1.0, 2.0}) {
    c.check(indexed("identities.zeta_second_derivative", {u}), {{"u", u}}, 1e-5, [&, u] {
      constexpr double h = 1e-3;
      const double fd = (zeta_second0(u + h, cfg) - zeta_second0(u - h, cfg)) / (2.0 * h);
      return Outcome{fd, 2.0 * gamma_hasse({1, u}).value, 0, {}};
    });
  }
  c.check("identities.barnes[1]", {{"t", 1.0}}, 1e-10,
          [&] { return Outcome{barnes_g_log(1.0, cfg), 0.0, 0, {}}; });
  c.check("identities.barnes[2]", {{"t", 2.0}}, 1e-10,
          [&] { return Outcome{barnes_g_log(2.0, cfg), 0.0, 0, {}}; });
  c.check("identities.barnes[1e-6]", {{"t", 1e-6}}, 1e-5,
          [&] { return Outcome{barnes_g_log(1e-6, cfg), 0.0, 0, {}}; });
  c.check("identities.barnes_recursion[0.5]", {{"t", 0.5}}, 1e-10, [&] {
    return Outcome{barnes_g_log(1.5, cfg) - barnes_g_log(0.5, cfg), specfun::log_gamma(1.5), 0,
                   {}};
  });
  for (double s : {-0.5, 0.5, 2.0, 3.0}) {
    for (double u : {0.5, 1.0, 2.0}) {
      c.check(indexed("identities.hermite_vs_laplace", {s, u}), {{"s", s}, {"u", u}}, 1e-8,
              [&, s, u] {
                return Outcome{hurwitz_hermite(s, u, cfg), hurwitz_laplace(s, u, cfg), 0, {}};
              });
      if (s > 1.0) {
        c.check(indexed("identities.hermite_vs_series", {s, u}), {{"s", s}, {"u", u}}, 1e-8,
                [&, s, u] {
                  return Outcome{hurwitz_hermite(s, u, cfg), specfun::hurwitz_zeta_series(s, u),
                                 0, {}};
                });
      }
    }
  }
  c.check("identities.hermite[0]", {{"s", 0.0}}, 1e-12,
          [&] { return Outcome{hurwitz_hermite(0.0, 1.0, cfg), -0.5, 0, {}}; });
  c.check("identities.hermite[-1]", {{"s", -1.0}}, 1e-10,
          [&] { return Outcome{hurwitz_hermite(-1.0, 1.0, cfg), -1.0 / 12.0, 0, {}}; });
  for (long m : {10L, 1000000L}) {
    c.check(indexed("identities.delta0", {double(m)}), {{"m", double(m)}}, 0.0, [&, m] {
      const auto d = delta_n(0, m, cfg);
      return Outcome{d.left, d.right, d.evaluations, {}};
    });
  }
  c.check("identities.delta1", {{"m", 1e6}}, 1e-5, [&] {
    const auto d = delta_n(1, 1000000, cfg);
    return Outcome{d.left, 0.5 * k.log_2pi - 1.0, d.evaluations, {}};
  });
  c.check("identities.delta1_closed", {}, 1e-10, [&] {
    const auto d = delta_n(1, 10, cfg);
    return Outcome{d.right, 0.5 * k.log_2pi - 1.0, 0, {}};
  });
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "bell") return Suite::Bell;
  if (name == "quad") return Suite::Quad;
  if (name == "stieltjes") return Suite::Stieltjes;
  if (name == "alteta") return Suite::Alteta;
  if (name == "identities") return Suite::Identities;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::Bell: return "bell";
    case Suite::Quad: return "quad";
    case Suite::Stieltjes: return "stieltjes";
    case Suite::Alteta: return "alteta";
    case Suite::Identities: return "identities";
    case Suite::All: return "all";
  }
  return "unknown";
}

Summary ValidationReport::summary() const {
  Summary s;
  s.total = checks.size();
  for (const auto& c : checks) {
    if (c.pass) ++s.passed;
    if (c.flags.any() || c.error) ++s.flagged;
  }
  s.failed = s.total - s.passed;
  return s;
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

bool ValidationReport::any_flagged() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const auto& c) { return c.flags.any() || c.error; });
}

ValidationReport run_suite(Suite suite, const ValidationOptions& opt) {
  opt.quad.validate();
  if (opt.tolerance && !(*opt.tolerance >= 0.0)) {
    throw ArgumentError("run_suite: tolerance must be nonnegative");
  }
  ValidationReport report;
  report.version = std::string(kVersion);
  report.timestamp = utc_timestamp();
  const std::pair<Suite, void (*)(Collector&)> order[] = {
      {Suite::Bell, bell_suite},
      {Suite::Quad, quad_suite},
      {Suite::Stieltjes, stieltjes_suite},
      {Suite::Alteta, alteta_suite},
      {Suite::Identities, identities_suite},
  };
  for (const auto& [which, run] : order) {
    if (suite != Suite::All && suite != which) continue;
    Collector c(std::string(suite_name(which)), opt, report.checks);
    run(c);
  }
  return report;
}

nlohmann::json to_json(const ValidationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& [name, value] : c.inputs) inputs[name] = value;
    nlohmann::json rec{
        {"id", c.id},
        {"suite", c.suite},
        {"inputs", inputs},
        {"left", number(c.left)},
        {"right", number(c.right)},
        {"difference", number(c.difference)},
        {"tolerance", c.tolerance},
        {"pass", c.pass},
        {"evaluations", c.evaluations},
        {"flags",
         {{"not_converged", c.flags.not_converged},
          {"cancellation", c.flags.cancellation},
          {"precision_warning", c.flags.precision_warning},
          {"error", c.error}}},
    };
    if (c.error) rec["message"] = c.message;
    checks.push_back(std::move(rec));
  }
  const Summary s = report.summary();
  return {
      {"version", report.version},
      {"timestamp", report.timestamp},
      {"checks", checks},
      {"summary",
       {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"flagged", s.flagged}}},
  };
}

std::string to_table(const ValidationReport& report) {
  std::ostringstream out;
  char line[512];
  std::snprintf(line, sizeof line, "%-44s %23s %23s %12s %9s %s\n", "check", "left", "right",
                "difference", "tolerance", "result");
  out << line;
  for (const auto& c : report.checks) {
    std::string result = c.pass ? "pass" : "FAIL";
    if (c.flags.not_converged) result += " not_converged";
    if (c.flags.cancellation) result += " cancellation";
    if (c.flags.precision_warning) result += " precision_warning";
    if (c.error) result += " error: " + c.message;
    std::snprintf(line, sizeof line, "%-44s %23.15g %23.15g %12.3e %9.1e %s\n", c.id.c_str(),
                  c.left, c.right, c.difference, c.tolerance, result.c_str());
    out << line;
  }
  const Summary s = report.summary();
  out << s.passed << "/" << s.total << " checks passed, " << s.failed << " failed, " << s.flagged
      << " flagged\n";
  return out.str();
}

}  // namespace stieltjes::validate
