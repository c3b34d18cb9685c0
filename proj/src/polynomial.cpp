#include "stieltjes/polynomial.hpp"

#include <cmath>
#include <cstdio>

namespace stieltjes {

RealPolynomial::RealPolynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {}

RealPolynomial::RealPolynomial(std::initializer_list<double> coefficients) : coeffs_(coefficients) {}

double RealPolynomial::operator()(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return RealPolynomial(std::vector<double>{0.0});
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return RealPolynomial(std::move(d));
}

std::string RealPolynomial::to_string(int precision) const {
  std::string out;
  char buf[64];
  for (int k = degree(); k >= 0; --k) {
    const double c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0.0 && k != 0) continue;
    const bool unit = std::abs(c) == 1.0 && k > 0;
    if (out.empty()) {
      if (unit && c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (!unit) {
      std::snprintf(buf, sizeof buf, "%.*g", precision, out.empty() ? c : std::abs(c));
      out += buf;
      if (k > 0) out += "*";
    }
    if (k >= 1) out += "z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace stieltjes
