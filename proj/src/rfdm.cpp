#include "vgph/rfdm.hpp"

#include <cmath>

#include "vgph/expm.hpp"

namespace vgph {

Tensor3 rfd_pressure_hessian(const Tensor3& a, const RfdConfig& cfg) {
    if (!(cfg.tau_k > 0.0) || !std::isfinite(cfg.tau_k))
        throw NumericError("rfdm: tau_k must be positive and finite");
    if (!is_finite(a)) throw NumericError("rfdm: non-finite input");

    const Tensor3 e = expm(a, cfg.tau_k);
    const Tensor3 c = e * transpose(e);
    const Tensor3 cinv = inverse3(c);
    const double a2 = trace(a * a);
    Tensor3 p = cinv * (-a2 / trace(cinv));
    p = symmetric_part(p);
    if (cfg.trace_correct) p = with_trace(p, -a2);
    return p;
}

}  // namespace vgph
