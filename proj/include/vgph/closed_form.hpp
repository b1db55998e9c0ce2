#pragma once

#include <array>
#include <string>

#include "vgph/pope_basis.hpp"
#include "vgph/scaling.hpp"
#include "vgph/tensor3.hpp"

namespace vgph {

/// Fixed mean coefficients plus the min-max scaling matrices that turn the
/// integrity bases into a network-free pressure-Hessian predictor. The
/// shipped set reproduces the published model; a retrained set can be
/// loaded from a constants file (same schema as the model file's scaling
/// section).
struct ClosedFormConstants {
    std::array<double, 10> coefficients{};
    std::array<ScalingPair, 10> basis{};
    ScalingPair output{};

    /// All pairs must satisfy f > g elementwise.
    void validate() const;
};

/// The published constants, embedded verbatim.
const ClosedFormConstants& ship_defaults();

ClosedFormConstants load_constants(const std::string& path);
void save_constants(const ClosedFormConstants& k, const std::string& path);

/// The six-step predictor: nondimensionalize -> bases -> scale ->
/// coefficient contraction -> dimensional unscale -> trace correction.
/// The result is symmetric with trace(P) = -trace(A*A) up to rounding.
Tensor3 predict_pressure_hessian(const Tensor3& a, NondimScale scale,
                                 const ClosedFormConstants& k,
                                 TracePolicy policy = TracePolicy::project);

}  // namespace vgph
