#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>
#include <sstream>

namespace quatdom {

/// One element of the real quaternion division algebra,
/// q = w + x*i + y*j + z*k with i*j = k, j*k = i, k*i = j, i^2 = j^2 = k^2 = -1.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    /// Real scalar embeds as w + 0i + 0j + 0k.
    constexpr explicit Quaternion(double real) : w(real) {}

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return Quaternion(1.0); }
    static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    constexpr Quaternion& operator+=(const Quaternion& r) {
        w += r.w; x += r.x; y += r.y; z += r.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& r) {
        w -= r.w; x -= r.x; y -= r.y; z -= r.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product; noncommutative.
constexpr Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return quat_mul(a, b);
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

/// nu(q) = q * conj(q) = w^2 + x^2 + y^2 + z^2.
constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double abs(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

/// Complex pair decomposition q = c1 + j*c2 with c1 = w + x*i, c2 = y - z*i.
inline std::complex<double> complex_first(const Quaternion& q) { return {q.w, q.x}; }
inline std::complex<double> complex_second(const Quaternion& q) { return {q.y, -q.z}; }

/// The 2x2 complex image [[c1, -conj(c2)], [c2, conj(c1)]] of q = c1 + j*c2.
/// Algebra homomorphism; det of the image equals norm_sq(q).
struct EmbeddedScalar {
    std::complex<double> a, b, c, d;  // row-major [[a, b], [c, d]]
};

inline EmbeddedScalar embed_scalar(const Quaternion& q) {
    const std::complex<double> c1 = complex_first(q);
    const std::complex<double> c2 = complex_second(q);
    return {c1, -std::conj(c2), c2, std::conj(c1)};
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace quatdom

#include <ostream>

namespace quatdom {

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ',' << q.x << ',' << q.y << ',' << q.z << ')';
}

}  // namespace quatdom
