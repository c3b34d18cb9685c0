#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace stieltjes {

/// Dense real polynomial, coefficients in ascending degree.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coefficients);
  RealPolynomial(std::initializer_list<double> coefficients);

  /// Degree of the stored coefficient vector (-1 for the empty polynomial).
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of z^k; zero beyond the stored degree.
  double coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }
  const std::vector<double>& coefficients() const { return coeffs_; }

  /// Horner evaluation.
  double operator()(double z) const;

  RealPolynomial derivative() const;

  /// e.g. "z^2 - 1.15443*z + -1.31...". Used only for display.
  std::string to_string(int precision = 15) const;

 private:
  std::vector<double> coeffs_;
};

}  // namespace stieltjes
