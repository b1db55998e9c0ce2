#include "vgph/expm.hpp"

#include <cmath>

namespace vgph {

Tensor3 expm(const Tensor3& m, double scale) {
    if (!is_finite(m) || !std::isfinite(scale))
        throw NumericError("expm: non-finite input");

    Tensor3 x = m * scale;
    const double nrm = frobenius_norm(x);
    if (!std::isfinite(nrm)) throw NumericError("expm: scaled argument overflows");

    int squarings = 0;
    if (nrm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
        if (squarings > 1024) throw NumericError("expm: argument norm out of range");
        x *= std::ldexp(1.0, -squarings);
    }

    // Horner evaluation of sum_{k<=12} x^k / k!
    constexpr int order = 12;
    Tensor3 acc = Tensor3::identity();
    for (int k = order; k >= 1; --k) {
        acc = x * acc * (1.0 / k);
        acc += Tensor3::identity();
    }
    for (int i = 0; i < squarings; ++i) acc = acc * acc;

    if (!is_finite(acc)) throw NumericError("expm: result overflow");
    return acc;
}

}  // namespace vgph
