// Command-line front end: single γ_n(u) values, validation suites, tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "stieltjes/bellpoly.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/gamma.hpp"
#include "stieltjes/identities.hpp"
#include "stieltjes/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFlagged = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

constexpr long kLimitTerms = 1000000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::optional<double> tol;
  int max_level = stieltjes::quad::QuadConfig{}.max_level;
  std::string json_path;
};

// Flag beats environment beats the built-in default.
std::optional<double> resolve_tolerance(const GlobalOptions& g) {
  if (g.tol) return g.tol;
  if (const char* env = std::getenv("STIELTJES_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      throw UsageError("STIELTJES_TOL is not a positive number: " + std::string(env));
    }
    return v;
  }
  return std::nullopt;
}

stieltjes::quad::QuadConfig quad_config(const GlobalOptions& g, std::optional<double> tol) {
  stieltjes::quad::QuadConfig cfg;
  cfg.max_level = g.max_level;
  if (tol) cfg.target_tol = *tol;
  try {
    cfg.validate();
  } catch (const stieltjes::ArgumentError& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

void write_json(const std::string& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  out << doc.dump(2) << '\n';
  out.flush();
  if (!out) throw std::ios_base::failure("failed writing " + path);
}

nlohmann::json result_json(const stieltjes::MethodResult& r) {
  return {{"method", std::string(stieltjes::method_name(r.method))},
          {"value", r.value},
          {"error_estimate", r.error_estimate},
          {"evaluations", r.evaluations},
          {"flags",
           {{"not_converged", r.flags.not_converged},
            {"cancellation", r.flags.cancellation},
            {"precision_warning", r.flags.precision_warning}}}};
}

std::string flag_text(const stieltjes::ResultFlags& f) {
  std::string s;
  if (f.not_converged) s += " not_converged";
  if (f.cancellation) s += " cancellation";
  if (f.precision_warning) s += " precision_warning";
  return s;
}

int cmd_gamma(int n, double u, const std::string& method, const GlobalOptions& g) {
  using namespace stieltjes;
  const auto tol = resolve_tolerance(g);
  const auto cfg = quad_config(g, tol);
  HasseOptions hasse;
  if (tol) hasse.tol = *tol;
  const GammaRequest req{n, u};

  const bool at_one = u == 1.0;
  std::vector<MethodResult> results;
  auto run = [&](const std::string& name) {
    if (name == "hasse") {
      results.push_back(gamma_hasse(req, hasse));
    } else if (name == "coffey") {
      results.push_back(gamma_coffey(req, cfg));
    } else if (name == "bell") {
      results.push_back(gamma_bell_family(req, cfg));
    } else if (name == "brede") {
      if (!at_one) throw UsageError("method brede requires u = 1");
      results.push_back(gamma_brede(n, cfg));
    } else if (name == "limit") {
      if (!at_one) throw UsageError("method limit requires u = 1");
      results.push_back(gamma_limit(n, kLimitTerms));
    }
  };
  try {
    if (method == "all") {
      run("hasse");
      run("coffey");
      if (n <= bell::kMaxDerivativeOrder) run("bell");
      if (at_one && n <= 10) run("brede");
      if (at_one && n <= 8) run("limit");
    } else {
      run(method);
    }
  } catch (const CapacityError& e) {
    throw UsageError(e.what());
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  bool flagged = false;
  double lo = results.front().value;
  double hi = lo;
  std::printf("%-8s %23s %12s %12s %s\n", "method", "value", "error_est", "evaluations", "flags");
  for (const auto& r : results) {
    std::printf("%-8s %23.15g %12.3e %12zu%s\n", std::string(method_name(r.method)).c_str(),
                r.value, r.error_estimate, r.evaluations, flag_text(r.flags).c_str());
    flagged = flagged || r.flags.not_converged;
    lo = std::min(lo, r.value);
    hi = std::max(hi, r.value);
  }
  if (results.size() > 1) std::printf("max pairwise spread %.3e\n", hi - lo);

  if (!g.json_path.empty()) {
    nlohmann::json doc{{"n", n}, {"u", u}, {"results", nlohmann::json::array()}};
    for (const auto& r : results) doc["results"].push_back(result_json(r));
    if (results.size() > 1) doc["spread"] = hi - lo;
    write_json(g.json_path, doc);
  }
  return flagged ? kExitFlagged : kExitOk;
}

int cmd_validate(const std::string& suite_name, const GlobalOptions& g) {
  using namespace stieltjes::validate;
  const auto suite = parse_suite(suite_name);
  if (!suite) throw UsageError("unknown suite: " + suite_name);
  ValidationOptions opt;
  opt.quad = quad_config(g, std::nullopt);
  opt.tolerance = resolve_tolerance(g);
  const auto report = run_suite(*suite, opt);
  std::cout << to_table(report);
  if (!g.json_path.empty()) write_json(g.json_path, to_json(report));
  return report.all_passed() ? kExitOk : kExitFlagged;
}

int cmd_table(const std::string& kind, int max_n, int max_m, double u, const GlobalOptions& g) {
  using namespace stieltjes;
  const auto cfg = quad_config(g, resolve_tolerance(g));
  bool flagged = false;
  try {
    if (kind == "gamma_n") {
      std::printf("%-4s %23s %12s\n", "n", "gamma_n(u)", "error_est");
      for (int n = 0; n <= max_n; ++n) {
        const auto r = gamma_hasse({n, u});
        flagged = flagged || r.flags.not_converged;
        std::printf("%-4d %23.15g %12.3e%s\n", n, r.value, r.error_estimate,
                    flag_text(r.flags).c_str());
      }
    } else if (kind == "brede_coeffs") {
      for (int n = 0; n <= max_n; ++n) {
        std::printf("p_%d(z) = %s\n", n, brede_poly(n).to_string(15).c_str());
      }
    } else if (kind == "gamma_derivs") {
      std::printf("%-4s %23s\n", "m", "Gamma^(m)(1)");
      for (int m = 0; m <= max_m; ++m) {
        std::printf("%-4d %23.15g\n", m, bell::gamma_derivative_at_one(m));
      }
    } else if (kind == "In") {
      std::printf("%-4s %23s %12s\n", "n", "I_n", "error_est");
      for (int n = 0; n <= max_n; ++n) {
        const auto r = i_n_integral(n, cfg);
        flagged = flagged || r.flags.not_converged;
        std::printf("%-4d %23.15g %12.3e%s\n", n, r.value, r.error_estimate,
                    flag_text(r.flags).c_str());
      }
    } else {
      throw UsageError("unknown table kind: " + kind);
    }
  } catch (const CapacityError& e) {
    throw UsageError(e.what());
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return flagged ? kExitFlagged : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalised Stieltjes constants and their cross-validation"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--tol", g.tol, "Tolerance (overrides STIELTJES_TOL)")->check(CLI::PositiveNumber);
  app.add_option("--max-level", g.max_level, "Maximum quadrature refinement level")
      ->check(CLI::Range(3, 20));
  app.add_option("--json", g.json_path, "Write a machine-readable report to this path");

  int n = 0;
  double u = 1.0;
  std::string method = "hasse";
  auto* gamma = app.add_subcommand("gamma", "Compute gamma_n(u)");
  gamma->add_option("-n,--order", n, "Order n")->required()->check(CLI::NonNegativeNumber);
  gamma->add_option("-u,--argument", u, "Argument u > 0")->check(CLI::PositiveNumber);
  gamma->add_option("--method", method, "Evaluation method")
      ->check(CLI::IsMember({"hasse", "coffey", "bell", "brede", "limit", "all"}));

  std::string suite = "all";
  auto* validate = app.add_subcommand("validate", "Run a validation suite");
  validate->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"bell", "quad", "stieltjes", "alteta", "identities", "all"}));

  std::string kind;
  int max_n = 5;
  int max_m = 6;
  double table_u = 1.0;
  auto* table = app.add_subcommand("table", "Print a table");
  table->add_option("kind", kind, "gamma_n, brede_coeffs, gamma_derivs or In")
      ->required()
      ->check(CLI::IsMember({"gamma_n", "brede_coeffs", "gamma_derivs", "In"}));
  table->add_option("--max-n", max_n, "Largest order")->check(CLI::Range(0, 12));
  table->add_option("--max-m", max_m, "Largest derivative order")->check(CLI::Range(0, 12));
  table->add_option("-u,--argument", table_u, "Argument u for gamma_n")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gamma) return cmd_gamma(n, u, method, g);
    if (*validate) return cmd_validate(suite, g);
    if (*table) return cmd_table(kind, max_n, max_m, table_u, g);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFlagged;
  }
  return kExitUsage;
}
