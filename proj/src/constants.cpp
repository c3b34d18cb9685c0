#include "stieltjes/constants.hpp"

#include <array>
#include <numbers>
#include <string>

#include "stieltjes/error.hpp"

namespace stieltjes {

namespace {

// ζ(2) .. ζ(16)
constexpr std::array<double, ConstantTable::kMaxZeta - 1> kZeta = {
    1.644934066848226436472, 1.2020569031595942854,   1.082323233711138191516,
    1.036927755143369926331, 1.017343061984449139715, 1.00834927738192282684,
    1.004077356197944339379, 1.002008392826082214418, 1.000994575127818085337,
    1.000494188604119464559, 1.000246086553308048299, 1.000122713347578489147,
    1.000061248135058704829, 1.000030588236307020494, 1.000015282259408651872,
};

}  // namespace

double ConstantTable::zeta(int k) const {
  if (k < 2 || k > kMaxZeta) {
    throw CapacityError("zeta constant table covers 2..16, requested " + std::to_string(k));
  }
  return kZeta[static_cast<std::size_t>(k - 2)];
}

std::span<const double> ConstantTable::zeta_values() const { return kZeta; }

const ConstantTable& constants() {
  static constexpr ConstantTable table{
      .euler = std::numbers::egamma,
      .log2 = std::numbers::ln2,
      .log_pi = 1.144729885849400174143,
      .log_2pi = 1.837877066409345483561,
      .pi = std::numbers::pi,
  };
  return table;
}

}  // namespace stieltjes
