#pragma once

#include "vgph/tensor3.hpp"

namespace vgph {

/// Matrix exponential e^(scale * m) by scaling-and-squaring over a
/// truncated Taylor series of order 12; the squaring count keeps the scaled
/// argument at Frobenius norm <= 0.5. Throws NumericError when intermediate
/// powers overflow.
Tensor3 expm(const Tensor3& m, double scale = 1.0);

}  // namespace vgph
