#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace topoforms {

/// Unit quaternions model SU(2): q0 + q.u with u_a = -i sigma^a, so that
/// u1 u2 = u3, u_a^2 = -1. The matrix is q0*1 - i (q1 s1 + q2 s2 + q3 s3).
struct Quat {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    friend Quat operator*(const Quat& a, const Quat& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    friend Quat operator+(const Quat& a, const Quat& b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Quat operator-(const Quat& a, const Quat& b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Quat operator*(double c, const Quat& q) { return {c * q.w, c * q.x, c * q.y, c * q.z}; }

    Quat conj() const { return {w, -x, -y, -z}; }
    double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    Quat normalized() const {
        const double n = norm();
        return {w / n, x / n, y / n, z / n};
    }

    /// exp(alpha * sigma^a / 2i) about a unit axis n.
    static Quat axis_angle(double nx, double ny, double nz, double alpha) {
        const double c = std::cos(0.5 * alpha), s = std::sin(0.5 * alpha);
        return {c, s * nx, s * ny, s * nz};
    }

    std::array<std::complex<double>, 4> matrix() const {
        using namespace std::complex_literals;
        // rows (0,0),(0,1),(1,0),(1,1)
        return {std::complex<double>(w, -z), std::complex<double>(-y, -x),
                std::complex<double>(y, -x), std::complex<double>(w, z)};
    }
};

/// tr of the SU(2) matrix of q (real: 2*q0).
inline double quat_trace(const Quat& q) { return 2.0 * q.w; }

} // namespace topoforms
