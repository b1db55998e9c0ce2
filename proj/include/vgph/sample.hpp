#pragma once

#include <optional>

#include "vgph/tensor3.hpp"

namespace vgph {

/// One fluid particle: its velocity-gradient tensor and, when the source
/// provides it, the ground-truth pressure-Hessian in consistent units.
struct SamplePoint {
    Tensor3 a;
    std::optional<Tensor3> p;
};

}  // namespace vgph
