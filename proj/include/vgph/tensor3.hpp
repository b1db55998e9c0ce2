#pragma once

#include <array>
#include <cmath>

#include "vgph/errors.hpp"

namespace vgph {

/// A 3x3 real matrix value, row-major. The workhorse type: velocity
/// gradients, strain/rotation rates, pressure-Hessians and the integrity
/// bases are all Tensor3 values.
struct Tensor3 {
    std::array<double, 9> m{};

    double& operator()(int i, int j) { return m[static_cast<size_t>(3 * i + j)]; }
    double operator()(int i, int j) const { return m[static_cast<size_t>(3 * i + j)]; }

    static Tensor3 zero() { return Tensor3{}; }

    static Tensor3 identity() {
        Tensor3 t;
        t.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return t;
    }

    static Tensor3 diag(double a, double b, double c) {
        Tensor3 t;
        t.m = {a, 0, 0, 0, b, 0, 0, 0, c};
        return t;
    }

    Tensor3& operator+=(const Tensor3& o) {
        for (int i = 0; i < 9; ++i) m[i] += o.m[i];
        return *this;
    }
    Tensor3& operator-=(const Tensor3& o) {
        for (int i = 0; i < 9; ++i) m[i] -= o.m[i];
        return *this;
    }
    Tensor3& operator*=(double s) {
        for (double& x : m) x *= s;
        return *this;
    }

    friend bool operator==(const Tensor3&, const Tensor3&) = default;
};

inline Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
inline Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
inline Tensor3 operator*(Tensor3 a, double s) { return a *= s; }
inline Tensor3 operator*(double s, Tensor3 a) { return a *= s; }
inline Tensor3 operator-(const Tensor3& a) { return a * -1.0; }

/// Matrix product.
inline Tensor3 operator*(const Tensor3& a, const Tensor3& b) {
    Tensor3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return c;
}

inline Tensor3 transpose(const Tensor3& a) {
    Tensor3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t(i, j) = a(j, i);
    return t;
}

inline double trace(const Tensor3& a) { return a.m[0] + a.m[4] + a.m[8]; }

inline double frobenius_norm(const Tensor3& a) {
    double s = 0;
    for (double x : a.m) s += x * x;
    return std::sqrt(s);
}

/// Frobenius inner product <a, b> = a_ij b_ij.
inline double frobenius_dot(const Tensor3& a, const Tensor3& b) {
    double s = 0;
    for (int i = 0; i < 9; ++i) s += a.m[i] * b.m[i];
    return s;
}

inline double max_abs(const Tensor3& a) {
    double s = 0;
    for (double x : a.m) s = std::max(s, std::abs(x));
    return s;
}

inline bool is_finite(const Tensor3& a) {
    for (double x : a.m)
        if (!std::isfinite(x)) return false;
    return true;
}

inline Tensor3 symmetric_part(const Tensor3& a) {
    Tensor3 s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));
    return s;
}

inline Tensor3 antisymmetric_part(const Tensor3& a) {
    Tensor3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = 0.5 * (a(i, j) - a(j, i));
    return r;
}

inline Tensor3 symmetrized(const Tensor3& a) { return symmetric_part(a); }

inline double det(const Tensor3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/// Elementwise (Hadamard) product.
inline Tensor3 hadamard(const Tensor3& a, const Tensor3& b) {
    Tensor3 c;
    for (int i = 0; i < 9; ++i) c.m[i] = a.m[i] * b.m[i];
    return c;
}

/// Adjugate/determinant inverse. Throws SingularError when |det| falls below
/// floor_rel * max(||a||_F, eps)^3.
Tensor3 inverse3(const Tensor3& a, double floor_rel = 1e-14);

/// Shifts the isotropic part so that trace(result) == target_trace, leaving
/// the trace-free part untouched.
inline Tensor3 with_trace(const Tensor3& a, double target_trace) {
    Tensor3 r = a;
    const double shift = (target_trace - trace(a)) / 3.0;
    r.m[0] += shift;
    r.m[4] += shift;
    r.m[8] += shift;
    return r;
}

inline Tensor3 deviatoric(const Tensor3& a) { return with_trace(a, 0.0); }

}  // namespace vgph
