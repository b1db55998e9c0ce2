#include "vgph/tensor3.hpp"

#include <cmath>
#include <sstream>

namespace vgph {

Tensor3 inverse3(const Tensor3& a, double floor_rel) {
    if (!is_finite(a)) throw NumericError("inverse3: non-finite input");
    const double d = det(a);
    const double scale = std::max(frobenius_norm(a), 1e-300);
    const double floor = floor_rel * scale * scale * scale;
    if (std::abs(d) < floor) {
        std::ostringstream msg;
        msg << "inverse3: singular matrix, |det| = " << std::abs(d)
            << " below floor " << floor;
        throw SingularError(msg.str(), std::abs(d));
    }
    Tensor3 inv;
    inv(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) / d;
    inv(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / d;
    inv(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / d;
    inv(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) / d;
    inv(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / d;
    inv(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / d;
    inv(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) / d;
    inv(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / d;
    inv(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / d;
    return inv;
}

}  // namespace vgph
