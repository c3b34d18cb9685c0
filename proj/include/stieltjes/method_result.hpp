#pragma once

#include <cstddef>
#include <string_view>

namespace stieltjes {

enum class Method { Hasse, Coffey, BellFamily, Brede, Limit, Hermite1, Quadrature };

std::string_view method_name(Method m);

struct ResultFlags {
  bool not_converged = false;
  /// Largest intermediate magnitude exceeded |value| * 1e8.
  bool cancellation = false;
  /// Order outside the tested envelope (n > 12).
  bool precision_warning = false;

  bool any() const { return not_converged || cancellation || precision_warning; }
};

struct MethodResult {
  double value = 0.0;
  double error_estimate = 0.0;
  Method method = Method::Quadrature;
  std::size_t evaluations = 0;
  ResultFlags flags;
};

inline constexpr double kCancellationRatio = 1e8;

/// Sets flags.cancellation from the largest intermediate magnitude.
inline void diagnose_cancellation(MethodResult& r, double peak) {
  r.flags.cancellation = peak > kCancellationRatio * (r.value < 0 ? -r.value : r.value);
}

}  // namespace stieltjes
