#include "stieltjes/moments.hpp"

#include <cmath>

#include "stieltjes/detail/combinatorics.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/kernels.hpp"

namespace stieltjes {

namespace {

template <class Bracket>
quad::QuadResult log_moment(int m, double u, Bracket bracket, const quad::QuadConfig& cfg) {
  if (m < 0) throw ArgumentError("log moment order must be nonnegative");
  if (!(u > 0.0)) throw DomainError("log moment needs u > 0");
  return quad::integrate_semiaxis(
      [=](double v) {
        const double decay = std::exp(-u * v);
        if (decay == 0.0) return 0.0;
        return detail::ipow(std::log(v), m) * decay * bracket(v);
      },
      cfg);
}

}  // namespace

quad::QuadResult binet_moment(int m, double u, const quad::QuadConfig& cfg) {
  return log_moment(m, u, kernels::binet_bracket, cfg);
}

quad::QuadResult bose_moment(int m, const quad::QuadConfig& cfg) {
  return log_moment(m, 1.0, kernels::bose_bracket, cfg);
}

quad::QuadResult coppo_moment(int m, const quad::QuadConfig& cfg) {
  return log_moment(m, 1.0, kernels::coppo_bracket, cfg);
}

quad::QuadResult gamma_moment(int m, const quad::QuadConfig& cfg) {
  return log_moment(m, 1.0, [](double) { return 1.0; }, cfg);
}

}  // namespace stieltjes
