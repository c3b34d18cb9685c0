#pragma once

// Integrand kernels shared by the integral representations.

namespace stieltjes::kernels {

/// 1/(e^v - 1) - 1/v + 1/2, the regularised Bose bracket. Tends to 0 as v -> 0.
/// For v < 1 it is summed from its Bernoulli series Σ B_{2k} v^{2k-1} / (2k)!.
double binet_bracket(double v);

/// 1/(e^v - 1) - 1/v, i.e. binet_bracket(v) - 1/2. Tends to -1/2 as v -> 0.
double bose_bracket(double v);

/// 1/(1 - e^{-v}) - 1/v, i.e. binet_bracket(v) + 1/2. Tends to 1/2 as v -> 0.
double coppo_bracket(double v);

/// binet_bracket(v) / v, finite (-> 1/12) at v = 0.
double binet_bracket_over_v(double v);

/// 1/(e^{2πx} - 1), exactly zero once e^{-2πx} underflows.
double plana_weight(double x);

}  // namespace stieltjes::kernels
