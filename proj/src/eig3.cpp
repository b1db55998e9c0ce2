#include "vgph/eig3.hpp"

#include <algorithm>
#include <cmath>

namespace vgph {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 normalized(const Vec3& a) {
    const double n = norm(a);
    return {a[0] / n, a[1] / n, a[2] / n};
}

// Characteristic polynomial p(x) = x^3 - i1 x^2 + i2 x - i3 and derivative.
struct CharPoly {
    double i1, i2, i3;
    double value(double x) const { return ((x - i1) * x + i2) * x - i3; }
    double deriv(double x) const { return (3 * x - 2 * i1) * x + i2; }
};

// Closed-form eigenvalues of a symmetric 3x3 via the trigonometric solution
// of the shifted cubic, then one Newton step per root on the exact
// characteristic polynomial.
std::array<double, 3> analytic_eigenvalues(const Tensor3& b) {
    const double q = trace(b) / 3.0;
    Tensor3 d = b;
    d.m[0] -= q;
    d.m[4] -= q;
    d.m[8] -= q;
    const double p2 = frobenius_dot(d, d) / 6.0;
    if (p2 == 0.0) return {q, q, q};  // isotropic input
    const double p = std::sqrt(p2);
    double r = det(d) / (2.0 * p * p2);
    r = std::clamp(r, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    // roots in descending order by construction of the cosine arguments
    std::array<double, 3> ev = {
        q + 2.0 * p * std::cos(phi),
        q + 2.0 * p * std::cos(phi - 2.0 * M_PI / 3.0),
        q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0),
    };

    const CharPoly cp{trace(b),
                      0.5 * (trace(b) * trace(b) - frobenius_dot(b, transpose(b))),
                      det(b)};
    for (double& x : ev) {
        const double dp = cp.deriv(x);
        if (dp != 0.0) {
            const double step = cp.value(x) / dp;
            if (std::isfinite(step)) x -= step;
        }
    }
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

// Cyclic Jacobi rotations; unconditionally stable for symmetric 3x3. Used
// near eigenvalue degeneracy and as the residual fallback.
void jacobi(const Tensor3& m, std::array<double, 3>& ev,
            std::array<Vec3, 3>& vec) {
    double a[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = m(i, j);
    double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    const double scale = std::max(max_abs(m), 1e-300);
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = std::sqrt(a[0][1] * a[0][1] + a[0][2] * a[0][2] +
                               a[1][2] * a[1][2]);
        if (off <= 1e-16 * scale) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 3; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = a[q][p] = 0.0;  // rotation zeroes the pivot exactly
                for (int k = 0; k < 3; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a[i][i] > a[j][j]; });
    for (int k = 0; k < 3; ++k) {
        ev[k] = a[order[k]][order[k]];
        vec[k] = {v[0][order[k]], v[1][order[k]], v[2][order[k]]};
    }
}

// Eigenvector of (b - lambda I) as the largest cross product of two rows.
Vec3 kernel_vector(const Tensor3& b, double lambda) {
    Vec3 r0 = {b(0, 0) - lambda, b(0, 1), b(0, 2)};
    Vec3 r1 = {b(1, 0), b(1, 1) - lambda, b(1, 2)};
    Vec3 r2 = {b(2, 0), b(2, 1), b(2, 2) - lambda};
    const Vec3 c01 = cross(r0, r1), c02 = cross(r0, r2), c12 = cross(r1, r2);
    const double n01 = dot(c01, c01), n02 = dot(c02, c02), n12 = dot(c12, c12);
    if (n01 >= n02 && n01 >= n12) return c01;
    if (n02 >= n12) return c02;
    return c12;
}

void fix_sign(Vec3& v) {
    int imax = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
    if (v[imax] < 0)
        for (double& x : v) x = -x;
}

}  // namespace

Tensor3 SymmetricEigenSystem::reconstruct() const {
    Tensor3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k)
                s += eigenvalues[k] * eigenvectors[k][i] * eigenvectors[k][j];
            r(i, j) = s;
        }
    return r;
}

SymmetricEigenSystem eig_symmetric(const Tensor3& m) {
    if (!is_finite(m)) throw NumericError("eig_symmetric: non-finite input");
    const double fro = frobenius_norm(m);
    const double asym = frobenius_norm(m - transpose(m));
    if (asym > 1e-12 * std::max(fro, 1e-300) && asym != 0.0)
        throw NumericError("eig_symmetric: input not symmetric");

    SymmetricEigenSystem out;
    std::array<Vec3, 3> vec;

    if (fro == 0.0) {
        out.eigenvalues = {0, 0, 0};
        out.eigenvectors = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
        return out;
    }

    // Work on the exactly-symmetrized, scaled copy.
    const double s = max_abs(m);
    Tensor3 b = symmetric_part(m) * (1.0 / s);

    std::array<double, 3> ev = analytic_eigenvalues(b);
    const double bnorm = frobenius_norm(b);
    const double min_gap =
        std::min(ev[0] - ev[1], ev[1] - ev[2]);

    bool ok = false;
    if (min_gap >= 1e-8 * bnorm) {
        vec[0] = kernel_vector(b, ev[0]);
        vec[2] = kernel_vector(b, ev[2]);
        if (norm(vec[0]) > 0 && norm(vec[2]) > 0) {
            vec[0] = normalized(vec[0]);
            // exact orthogonality of the extremes, middle vector from the pair
            const double d = dot(vec[2], vec[0]);
            for (int i = 0; i < 3; ++i) vec[2][i] -= d * vec[0][i];
            if (norm(vec[2]) > 0) {
                vec[2] = normalized(vec[2]);
                vec[1] = cross(vec[2], vec[0]);
                Tensor3 rec;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        double acc = 0;
                        for (int k = 0; k < 3; ++k)
                            acc += ev[k] * vec[k][i] * vec[k][j];
                        rec(i, j) = acc;
                    }
                ok = frobenius_norm(rec - b) <= 1e-11 * bnorm;
            }
        }
    }
    if (!ok) jacobi(b, ev, vec);

    for (auto& v : vec) fix_sign(v);
    for (int k = 0; k < 3; ++k) {
        out.eigenvalues[k] = ev[k] * s;
        out.eigenvectors[k] = vec[k];
    }
    return out;
}

}  // namespace vgph
