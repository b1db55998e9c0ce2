#pragma once

#include <array>
#include <span>

#include "vgph/tensor3.hpp"

namespace vgph {

/// Elementwise min (g) and max (f) of one basis tensor over a population,
/// used to map each element into [0, 1]. Elements where f == g are constant
/// over the population; their scaled value is pinned to 0.5 and they carry
/// no gradient signal.
struct ScalingPair {
    Tensor3 g;
    Tensor3 f;

    bool constant_at(int k) const { return f.m[static_cast<size_t>(k)] == g.m[static_cast<size_t>(k)]; }
    bool has_constant_elements() const {
        for (int k = 0; k < 9; ++k)
            if (constant_at(k)) return true;
        return false;
    }
    /// f >= g everywhere (f > g when strict).
    bool valid(bool strict = false) const {
        for (int k = 0; k < 9; ++k) {
            const double d = f.m[static_cast<size_t>(k)] - g.m[static_cast<size_t>(k)];
            if (strict ? !(d > 0) : !(d >= 0)) return false;
        }
        return true;
    }
};

/// (t - g) ⊘ (f - g); constant elements map to 0.5.
inline Tensor3 apply_scaling(const Tensor3& t, const ScalingPair& pair) {
    Tensor3 out;
    for (size_t k = 0; k < 9; ++k) {
        const double d = pair.f.m[k] - pair.g.m[k];
        out.m[k] = d == 0.0 ? 0.5 : (t.m[k] - pair.g.m[k]) / d;
    }
    return out;
}

/// Dimensional form of a scaled prediction: [p ∘ (f - g) + g] * eps^2.
inline Tensor3 unscale_output(const Tensor3& p_scaled, const ScalingPair& pair,
                              double epsilon) {
    Tensor3 out;
    const double e2 = epsilon * epsilon;
    for (size_t k = 0; k < 9; ++k) {
        const double d = pair.f.m[k] - pair.g.m[k];
        out.m[k] = (p_scaled.m[k] * d + pair.g.m[k]) * e2;
    }
    return out;
}

/// Inverse of unscale_output: the scaled-space image of a dimensional
/// tensor. Constant elements map to 0.5.
inline Tensor3 scale_output(const Tensor3& p_dimensional, const ScalingPair& pair,
                            double epsilon) {
    Tensor3 out;
    const double e2 = epsilon * epsilon;
    for (size_t k = 0; k < 9; ++k) {
        const double d = pair.f.m[k] - pair.g.m[k];
        out.m[k] = d == 0.0 ? 0.5 : (p_dimensional.m[k] / e2 - pair.g.m[k]) / d;
    }
    return out;
}

/// Elementwise min/max accumulated over a population.
inline ScalingPair fit_pair(std::span<const Tensor3> population) {
    if (population.empty())
        throw NumericError("fit_pair: empty population");
    ScalingPair pair{population[0], population[0]};
    for (const Tensor3& t : population)
        for (size_t k = 0; k < 9; ++k) {
            pair.g.m[k] = std::min(pair.g.m[k], t.m[k]);
            pair.f.m[k] = std::max(pair.f.m[k], t.m[k]);
        }
    return pair;
}

}  // namespace vgph
