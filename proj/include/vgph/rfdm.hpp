#pragma once

#include "vgph/tensor3.hpp"

namespace vgph {

/// Recent-fluid-deformation closure settings. tau_k is the deformation
/// timescale; with epsilon-nondimensionalized gradients a value of order one
/// plays the Kolmogorov-timescale surrogate.
struct RfdConfig {
    double tau_k = 1.0;
    bool trace_correct = false;  // optional post-step, matches the closed-form model
};

/// P = -(trace(A^2)/trace(C^-1)) C^-1 with C = e^(tau A) e^(tau A^T).
/// Output is symmetric; its eigenvalues all share the sign of -trace(A^2).
Tensor3 rfd_pressure_hessian(const Tensor3& a, const RfdConfig& cfg);

}  // namespace vgph
