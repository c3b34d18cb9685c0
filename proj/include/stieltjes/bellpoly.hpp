#pragma once

// Exponential complete Bell polynomials Y_n(x_1, ..., x_n).
//
// Two independent paths are provided. complete_bell() builds the exact
// polynomial by enumerating partitions of n, with big-integer coefficients
// n! / (k_1! ... k_n! (1!)^{k_1} ... (n!)^{k_n}). eval_bell() evaluates Y_n
// numerically through the binomial recurrence
//
//   Y_{n+1} = Σ_{k=0}^{n} C(n,k) Y_k x_{n-k+1},
//
// which is O(n^2) and never expands the polynomial. Both are templated on the
// scalar so the identity tests can run them in exact rational arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "stieltjes/error.hpp"

namespace stieltjes::bell {

using Integer = boost::multiprecision::cpp_int;

inline constexpr int kDefaultMaxOrder = 20;
inline constexpr int kMaxDerivativeOrder = 12;

/// Multiplicity form of an integer partition: multiplicities[j-1] = number of parts equal to j.
struct Partition {
  std::vector<unsigned> multiplicities;

  /// Σ j·k_j; equals n for every partition of n.
  unsigned weight() const;
};

/// All partitions of n, generated as nonincreasing part lists in reverse
/// lexicographic order and converted to multiplicity vectors of length n.
std::vector<Partition> partitions(int n);

/// Exponent vector (e_1, ..., e_n) of a monomial x_1^{e_1} ... x_n^{e_n}.
using Exponents = std::vector<unsigned>;

namespace detail {

template <class T>
T from_integer(const Integer& value) {
  if constexpr (std::is_floating_point_v<T>) {
    return value.template convert_to<T>();
  } else {
    return T(value);
  }
}

template <class T>
T power(T base, unsigned exponent) {
  T result(1);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace detail

class BellPolynomial {
 public:
  BellPolynomial(int order, std::map<Exponents, Integer> terms);

  int order() const { return order_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }

  /// Coefficient of the monomial with the given exponents (0 when absent).
  Integer coefficient(const Exponents& exponents) const;

  /// Sum of coefficients, i.e. the value at x_j = 1; this is the Bell number B_n.
  Integer coefficient_sum() const;

  /// Direct evaluation of the expanded polynomial.
  template <class T>
  T evaluate(std::span<const T> xs) const {
    if (xs.size() < static_cast<std::size_t>(order_)) {
      throw ArgumentError("BellPolynomial::evaluate: need " + std::to_string(order_) +
                          " arguments, got " + std::to_string(xs.size()));
    }
    T total(0);
    for (const auto& [exponents, coeff] : terms_) {
      T term = detail::from_integer<T>(coeff);
      for (std::size_t j = 0; j < exponents.size(); ++j) {
        if (exponents[j] != 0) term *= detail::power(xs[j], exponents[j]);
      }
      total += term;
    }
    return total;
  }

  /// Human-readable form with the highest power of x1 first, e.g. "x1^2 + x2".
  std::string to_string() const;

 private:
  int order_;
  std::map<Exponents, Integer> terms_;
};

/// Exact Y_n. Throws CapacityError when n exceeds max_order.
BellPolynomial complete_bell(int n, int max_order = kDefaultMaxOrder);

/// Y_0, ..., Y_n evaluated by the binomial recurrence.
template <class T>
std::vector<T> eval_bell_sequence(int n, std::span<const T> xs) {
  if (n < 0) throw ArgumentError("eval_bell: order must be nonnegative");
  if (xs.size() < static_cast<std::size_t>(n)) {
    throw ArgumentError("eval_bell: need " + std::to_string(n) + " arguments, got " +
                        std::to_string(xs.size()));
  }
  std::vector<T> y;
  y.reserve(static_cast<std::size_t>(n) + 1);
  y.emplace_back(1);
  std::vector<T> binom{T(1)};  // row m of Pascal's triangle
  for (int m = 0; m < n; ++m) {
    T next(0);
    for (int k = 0; k <= m; ++k) {
      next += binom[static_cast<std::size_t>(k)] * y[static_cast<std::size_t>(k)] *
              xs[static_cast<std::size_t>(m - k)];
    }
    y.push_back(next);
    std::vector<T> row(binom.size() + 1, T(1));
    for (std::size_t k = 1; k < binom.size(); ++k) row[k] = binom[k - 1] + binom[k];
    binom = std::move(row);
  }
  return y;
}

/// Y_n(x_1, ..., x_n) by the binomial recurrence.
template <class T>
T eval_bell(int n, std::span<const T> xs) {
  return eval_bell_sequence(n, xs).back();
}

inline double eval_bell(int n, const std::vector<double>& xs) {
  return eval_bell<double>(n, std::span<const double>(xs));
}

/// Γ^{(m)}(1) = Y_m(-γ, x_1, ..., x_{m-1}) with x_p = (-1)^{p+1} p! ζ(p+1).
double gamma_derivative_at_one(int m);

/// d^k/dx^k [1/Γ(1+x)] at x = 0 = Y_k(γ, -1!ζ(2), 2!ζ(3), -3!ζ(4), ...).
double inv_gamma_derivative_at_zero(int k);

/// The argument vector (x_1, ..., x_k) fed to Y_k by gamma_derivative_at_one.
std::vector<double> gamma_derivative_arguments(int k);

/// The argument vector (x_1, ..., x_k) fed to Y_k by inv_gamma_derivative_at_zero.
std::vector<double> inv_gamma_derivative_arguments(int k);

}  // namespace stieltjes::bell
