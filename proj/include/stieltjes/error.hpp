#pragma once

#include <stdexcept>
#include <string>

namespace stieltjes {

/// Argument outside the mathematical domain of a function (x <= 0, s == 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Request above a configured order/size limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed call: wrong vector length, bad configuration.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An integrand returned a non-finite sample.
class IntegrandError : public std::runtime_error {
 public:
  IntegrandError(const std::string& what, double abscissa)
      : std::runtime_error(what + " at x=" + std::to_string(abscissa)), abscissa_(abscissa) {}

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

}  // namespace stieltjes
