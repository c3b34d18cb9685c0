#pragma once

// Log-moments of the Binet-type brackets against e^{-uv}.

#include "stieltjes/quad.hpp"

namespace stieltjes {

/// ∫_0^∞ e^{-uv} log^m v [1/(e^v-1) - 1/v + 1/2] dv.
quad::QuadResult binet_moment(int m, double u, const quad::QuadConfig& cfg = {});

/// ∫_0^∞ e^{-v} log^m v [1/(e^v-1) - 1/v] dv.
quad::QuadResult bose_moment(int m, const quad::QuadConfig& cfg = {});

/// ∫_0^∞ e^{-v} log^m v [1/(1-e^{-v}) - 1/v] dv.
quad::QuadResult coppo_moment(int m, const quad::QuadConfig& cfg = {});

/// ∫_0^∞ e^{-v} log^m v dv = Γ^{(m)}(1), by quadrature.
quad::QuadResult gamma_moment(int m, const quad::QuadConfig& cfg = {});

}  // namespace stieltjes
