#include "stieltjes/bell_identities.hpp"

#include <random>

#include "stieltjes/bellpoly.hpp"

namespace stieltjes::bell {

namespace {

std::vector<Rational> binomial_row(int n) {
  std::vector<Rational> row{Rational(1)};
  for (int k = 1; k <= n; ++k) row.push_back(row.back() * (n - k + 1) / k);
  return row;
}

std::span<const Rational> head(std::span<const Rational> xs, int n) {
  if (xs.size() < static_cast<std::size_t>(n)) {
    throw ArgumentError("bell identity: need " + std::to_string(n) + " arguments");
  }
  return xs.first(static_cast<std::size_t>(n));
}

}  // namespace

std::vector<Rational> sample_rationals(std::size_t count, std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> numer(-9, 9);
  std::uniform_int_distribution<int> denom(1, 7);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int p = numer(gen);
    const int q = denom(gen);
    out.emplace_back(p, q);
  }
  return out;
}

Rational negation_convolution_residual(int n, std::span<const Rational> xs) {
  const auto x = head(xs, n);
  std::vector<Rational> neg(x.begin(), x.end());
  for (auto& v : neg) v = -v;
  const auto y_pos = eval_bell_sequence<Rational>(n, x);
  const auto y_neg = eval_bell_sequence<Rational>(n, std::span<const Rational>(neg));
  const auto c = binomial_row(n);
  Rational sum = 0;
  for (int j = 0; j <= n; ++j) {
    sum += c[static_cast<std::size_t>(j)] * y_pos[static_cast<std::size_t>(j)] *
           y_neg[static_cast<std::size_t>(n - j)];
  }
  return sum;
}

Rational addition_residual(int n, std::span<const Rational> xs, std::span<const Rational> ys) {
  const auto x = head(xs, n);
  const auto y = head(ys, n);
  std::vector<Rational> both(x.begin(), x.end());
  for (std::size_t i = 0; i < both.size(); ++i) both[i] += y[i];
  const auto yx = eval_bell_sequence<Rational>(n, x);
  const auto yy = eval_bell_sequence<Rational>(n, y);
  const auto c = binomial_row(n);
  Rational rhs = 0;
  for (int k = 0; k <= n; ++k) {
    rhs += c[static_cast<std::size_t>(k)] * yx[static_cast<std::size_t>(n - k)] *
           yy[static_cast<std::size_t>(k)];
  }
  return eval_bell<Rational>(n, std::span<const Rational>(both)) - rhs;
}

Rational scaling_residual(int n, const Rational& a, std::span<const Rational> xs) {
  const auto x = head(xs, n);
  std::vector<Rational> scaled(x.begin(), x.end());
  Rational power = 1;
  for (auto& v : scaled) {
    power *= a;
    v *= power;
  }
  Rational an = 1;
  for (int k = 0; k < n; ++k) an *= a;
  return eval_bell<Rational>(n, std::span<const Rational>(scaled)) - an * eval_bell<Rational>(n, x);
}

Rational shift_residual(int n, const Rational& alpha, std::span<const Rational> xs) {
  const auto x = head(xs, n);
  std::vector<Rational> shifted(x.begin(), x.end());
  if (n > 0) shifted.front() += alpha;
  const auto y = eval_bell_sequence<Rational>(n, x);
  const auto c = binomial_row(n);
  Rational rhs = 0;
  Rational power = 1;  // α^{n-k}, built from k = n downwards
  for (int k = n; k >= 0; --k) {
    rhs += c[static_cast<std::size_t>(k)] * power * y[static_cast<std::size_t>(k)];
    power *= alpha;
  }
  return eval_bell<Rational>(n, std::span<const Rational>(shifted)) - rhs;
}

Rational expansion_residual(int n, std::span<const Rational> xs) {
  const auto x = head(xs, n);
  return eval_bell<Rational>(n, x) - complete_bell(n).evaluate<Rational>(x);
}

}  // namespace stieltjes::bell
