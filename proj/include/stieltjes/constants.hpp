#pragma once

#include <span>

namespace stieltjes {

/// Mathematical constants at full binary64 accuracy.
struct ConstantTable {
  static constexpr int kMaxZeta = 16;

  double euler;    // γ
  double log2;
  double log_pi;
  double log_2pi;
  double pi;

  /// ζ(k) for 2 <= k <= kMaxZeta. Throws CapacityError otherwise.
  double zeta(int k) const;

  std::span<const double> zeta_values() const;
};

const ConstantTable& constants();

}  // namespace stieltjes
