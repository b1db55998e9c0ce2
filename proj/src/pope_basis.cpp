#include "vgph/pope_basis.hpp"

#include <cmath>

namespace vgph {

bool incompressibility_ok(const Tensor3& a, double tol) {
    const double fro = frobenius_norm(a);
    if (fro == 0.0) return true;
    return std::abs(trace(a)) <= tol * fro;
}

NondimScale compute_scale(std::span<const SamplePoint> samples) {
    if (samples.empty())
        throw NumericError("compute_scale: empty sample population");
    double sum = 0.0;
    for (const SamplePoint& s : samples) {
        if (!is_finite(s.a))
            throw NumericError("compute_scale: non-finite velocity gradient");
        sum += frobenius_norm(s.a);
    }
    const double eps = sum / static_cast<double>(samples.size());
    if (eps <= 0.0)
        throw NumericError("compute_scale: all-zero population, epsilon = 0");
    return NondimScale{eps};
}

BasisBundle compute_basis(const Tensor3& a, NondimScale scale,
                          TracePolicy policy) {
    if (!is_finite(a)) throw NumericError("compute_basis: non-finite input");
    if (policy == TracePolicy::reject && !incompressibility_ok(a))
        throw NumericError("compute_basis: incompressibility violated, |trace| > tol * ||A||");

    const Tensor3 a0 = with_trace(a, 0.0);
    const double inv2e = 1.0 / (2.0 * scale.epsilon);

    BasisBundle b;
    b.s = (a0 + transpose(a0)) * inv2e;
    b.r = (a0 - transpose(a0)) * inv2e;

    const Tensor3& s = b.s;
    const Tensor3& r = b.r;
    const Tensor3 s2 = s * s;
    const Tensor3 r2 = r * r;
    const Tensor3 i = Tensor3::identity();

    b.t[0] = s;
    b.t[1] = s * r - r * s;
    b.t[2] = s2 - i * (trace(s2) / 3.0);
    b.t[3] = r2 - i * (trace(r2) / 3.0);
    b.t[4] = r * s2 - s2 * r;
    b.t[5] = r2 * s + s * r2 - i * (2.0 / 3.0 * trace(s * r2));
    b.t[6] = r * s * r2 - r2 * s * r;
    b.t[7] = s * r * s2 - s2 * r * s;
    b.t[8] = r2 * s2 + s2 * r2 - i * (2.0 / 3.0 * trace(s2 * r2));
    b.t[9] = r * s2 * r2 - r2 * s2 * r;

    b.lambda[0] = trace(s2);
    b.lambda[1] = trace(r2);
    b.lambda[2] = trace(s2 * s);
    b.lambda[3] = trace(r2 * s);
    b.lambda[4] = trace(r2 * s2);
    return b;
}

}  // namespace vgph
