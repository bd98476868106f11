#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace comtop {

// Single global tolerance default. All approximate comparisons in the library
// take a tol parameter that defaults to this; matrix closeness is always
// measured in the max-abs-entry norm.
inline constexpr double kDefaultTol = 1e-9;

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double max_abs(const Vec3& v) {
    return std::max({std::fabs(v.x), std::fabs(v.y), std::fabs(v.z)});
}
inline Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}

struct Mat3 {
    // row-major
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

    double& operator()(int r, int c) { return m[r][c]; }
    double operator()(int r, int c) const { return m[r][c]; }

    static Mat3 identity() {
        Mat3 e;
        e.m[0][0] = e.m[1][1] = e.m[2][2] = 1.0;
        return e;
    }
};

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
            c.m[i][j] = s;
        }
    return c;
}

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
            a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
            a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
}

inline Mat3 transpose(const Mat3& a) {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t.m[i][j] = a.m[j][i];
    return t;
}

inline double max_abs_diff(const Mat3& a, const Mat3& b) {
    double d = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d = std::max(d, std::fabs(a.m[i][j] - b.m[i][j]));
    return d;
}

inline double trace(const Mat3& a) { return a.m[0][0] + a.m[1][1] + a.m[2][2]; }

inline double det(const Mat3& a) {
    return a.m[0][0] * (a.m[1][1] * a.m[2][2] - a.m[1][2] * a.m[2][1]) -
           a.m[0][1] * (a.m[1][0] * a.m[2][2] - a.m[1][2] * a.m[2][0]) +
           a.m[0][2] * (a.m[1][0] * a.m[2][1] - a.m[1][1] * a.m[2][0]);
}

// unit quaternions double-cover the rotation group; q and -q give the same rotation
struct Quat {
    double w = 1, x = 0, y = 0, z = 0;
};

inline Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quat operator-(const Quat& q) { return {-q.w, -q.x, -q.y, -q.z}; }
inline Quat conj(const Quat& q) { return {q.w, -q.x, -q.y, -q.z}; }
inline double norm(const Quat& q) {
    return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}
inline double max_abs_diff(const Quat& a, const Quat& b) {
    return std::max({std::fabs(a.w - b.w), std::fabs(a.x - b.x), std::fabs(a.y - b.y),
                     std::fabs(a.z - b.z)});
}

using cdouble = std::complex<double>;

struct CMat2 {
    cdouble m[2][2] = {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}};

    cdouble& operator()(int r, int c) { return m[r][c]; }
    cdouble operator()(int r, int c) const { return m[r][c]; }

    static CMat2 identity() {
        CMat2 e;
        e.m[0][0] = e.m[1][1] = 1.0;
        return e;
    }
};

inline CMat2 operator*(const CMat2& a, const CMat2& b) {
    CMat2 c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return c;
}

inline CMat2 operator*(cdouble s, const CMat2& a) {
    CMat2 c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c.m[i][j] = s * a.m[i][j];
    return c;
}

inline CMat2 adjoint(const CMat2& a) {
    CMat2 t;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) t.m[i][j] = std::conj(a.m[j][i]);
    return t;
}

inline cdouble det(const CMat2& a) { return a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0]; }

inline double max_abs_diff(const CMat2& a, const CMat2& b) {
    double d = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(a.m[i][j] - b.m[i][j]));
    return d;
}

} // namespace comtop
