#pragma once

#include <array>
#include <span>

#include "vgph/sample.hpp"
#include "vgph/tensor3.hpp"

namespace vgph {

/// Sample-wide nondimensionalization constant: the mean Frobenius norm of
/// the velocity-gradient tensor over a whole population.
struct NondimScale {
    double epsilon = 1.0;
};

/// The ten trace-free integrity bases and five invariants of (S, R) for one
/// sample, together with the nondimensional strain/rotation rates they were
/// built from.
struct BasisBundle {
    std::array<Tensor3, 10> t;
    std::array<double, 5> lambda;
    Tensor3 s;
    Tensor3 r;
};

enum class TracePolicy {
    project,  // subtract trace(A)/3 * I and continue (default)
    reject,   // throw when the incompressibility tolerance is exceeded
};

constexpr double kIncompressibilityTol = 1e-6;

/// True when |trace(a)| <= tol * ||a||_F.
bool incompressibility_ok(const Tensor3& a, double tol = kIncompressibilityTol);

/// Mean Frobenius norm over the population. Rejects empty and all-zero
/// input.
NondimScale compute_scale(std::span<const SamplePoint> samples);

/// S = (A + A^T)/2eps, R = (A - A^T)/2eps, then the ten bases and five
/// invariants. The trace of A is always projected out before the split;
/// with TracePolicy::reject a violation beyond the incompressibility
/// tolerance throws instead.
BasisBundle compute_basis(const Tensor3& a, NondimScale scale,
                          TracePolicy policy = TracePolicy::project);

}  // namespace vgph
