#pragma once

// Cross-validation harness: runs the invariant and acceptance checks of each
// module and collects them into a report with a fixed check order.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stieltjes/method_result.hpp"
#include "stieltjes/quad.hpp"

namespace stieltjes::validate {

inline constexpr std::string_view kVersion = "1.0.0";

enum class Suite { Bell, Quad, Stieltjes, Alteta, Identities, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct CheckRecord {
  std::string id;
  std::string suite;
  std::vector<std::pair<std::string, double>> inputs;
  double left = 0.0;
  double right = 0.0;
  double difference = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::size_t evaluations = 0;
  ResultFlags flags;
  /// Set when the check threw; message holds the exception text.
  bool error = false;
  std::string message;
};

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t flagged = 0;
};

struct ValidationReport {
  std::string version;
  std::string timestamp;
  std::vector<CheckRecord> checks;

  Summary summary() const;
  bool all_passed() const;
  bool any_flagged() const;
};

struct ValidationOptions {
  quad::QuadConfig quad;
  /// Replaces every per-check tolerance when set.
  std::optional<double> tolerance;
};

ValidationReport run_suite(Suite suite, const ValidationOptions& opt = {});

nlohmann::json to_json(const ValidationReport& report);
/// Fixed-width table with 15 significant digits; one row per check plus a summary line.
std::string to_table(const ValidationReport& report);

}  // namespace stieltjes::validate
