#include "stieltjes/bellpoly.hpp"

#include <sstream>

#include "stieltjes/constants.hpp"

namespace stieltjes::bell {

namespace {

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

// Nonincreasing part lists of n with every part <= max_part.
void enumerate(unsigned remaining, unsigned max_part, std::vector<unsigned>& parts,
               std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(parts);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    enumerate(remaining - part, part, parts, out);
    parts.pop_back();
  }
}

void require_derivative_order(int order, const char* fn) {
  if (order < 0 || order > kMaxDerivativeOrder) {
    throw CapacityError(std::string(fn) + ": order must be in 0.." +
                        std::to_string(kMaxDerivativeOrder) + ", got " + std::to_string(order));
  }
}

}  // namespace

unsigned Partition::weight() const {
  unsigned w = 0;
  for (std::size_t j = 0; j < multiplicities.size(); ++j) {
    w += static_cast<unsigned>(j + 1) * multiplicities[j];
  }
  return w;
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw ArgumentError("partitions: n must be nonnegative");
  const auto size = static_cast<unsigned>(n);
  std::vector<std::vector<unsigned>> lists;
  std::vector<unsigned> scratch;
  enumerate(size, size, scratch, lists);

  std::vector<Partition> result;
  result.reserve(lists.size());
  for (const auto& parts : lists) {
    Partition p{std::vector<unsigned>(size, 0U)};
    for (unsigned part : parts) ++p.multiplicities[part - 1];
    result.push_back(std::move(p));
  }
  return result;
}

BellPolynomial::BellPolynomial(int order, std::map<Exponents, Integer> terms)
    : order_(order), terms_(std::move(terms)) {}

Integer BellPolynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer BellPolynomial::coefficient_sum() const {
  Integer sum = 0;
  for (const auto& [_, c] : terms_) sum += c;
  return sum;
}

std::string BellPolynomial::to_string() const {
  if (order_ == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exponents, coeff] = *it;
    if (!first) os << " + ";
    first = false;
    bool need_star = false;
    if (coeff != 1) {
      os << coeff;
      need_star = true;
    }
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      if (exponents[j] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << (j + 1);
      if (exponents[j] > 1) os << '^' << exponents[j];
      need_star = true;
    }
  }
  return os.str();
}

BellPolynomial complete_bell(int n, int max_order) {
  if (n < 0) throw ArgumentError("complete_bell: order must be nonnegative");
  if (n > max_order) {
    throw CapacityError("complete_bell: order " + std::to_string(n) + " exceeds maximum " +
                        std::to_string(max_order));
  }
  std::map<Exponents, Integer> terms;
  if (n == 0) {
    terms.emplace(Exponents{}, Integer(1));
    return BellPolynomial(0, std::move(terms));
  }
  const Integer n_factorial = factorial(static_cast<unsigned>(n));
  for (const auto& p : partitions(n)) {
    Integer denom = 1;
    for (std::size_t j = 0; j < p.multiplicities.size(); ++j) {
      const unsigned k = p.multiplicities[j];
      if (k == 0) continue;
      denom *= factorial(k);
      const Integer jf = factorial(static_cast<unsigned>(j + 1));
      for (unsigned r = 0; r < k; ++r) denom *= jf;
    }
    terms.emplace(p.multiplicities, n_factorial / denom);
  }
  return BellPolynomial(n, std::move(terms));
}

std::vector<double> gamma_derivative_arguments(int k) {
  require_derivative_order(k, "gamma_derivative_arguments");
  const auto& c = constants();
  std::vector<double> xs;
  if (k >= 1) xs.push_back(-c.euler);
  double factorial_p = 1.0;
  for (int p = 1; p < k; ++p) {
    factorial_p *= p;
    const double sign = (p % 2 == 1) ? 1.0 : -1.0;  // (-1)^{p+1}
    xs.push_back(sign * factorial_p * c.zeta(p + 1));
  }
  return xs;
}

std::vector<double> inv_gamma_derivative_arguments(int k) {
  require_derivative_order(k, "inv_gamma_derivative_arguments");
  auto xs = gamma_derivative_arguments(k);
  for (double& x : xs) x = -x;
  return xs;
}

double gamma_derivative_at_one(int m) {
  const auto xs = gamma_derivative_arguments(m);
  return eval_bell<double>(m, xs);
}

double inv_gamma_derivative_at_zero(int k) {
  const auto xs = inv_gamma_derivative_arguments(k);
  return eval_bell<double>(k, xs);
}

}  // namespace stieltjes::bell
