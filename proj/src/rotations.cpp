#include "comtop/rotations.hpp"

#include <cmath>

#include "comtop/components.hpp"
#include "comtop/rng.hpp"

namespace comtop {

RotationElement project(const Quat& q, double tol) {
    double n = norm(q);
    if (std::fabs(n - 1.0) > tol) throw NormError("project: quaternion norm deviates from 1");
    double w = q.w, x = q.x, y = q.y, z = q.z;
    RotationElement r;
    r.mat.m[0][0] = 1 - 2 * (y * y + z * z);
    r.mat.m[0][1] = 2 * (x * y - w * z);
    r.mat.m[0][2] = 2 * (x * z + w * y);
    r.mat.m[1][0] = 2 * (x * y + w * z);
    r.mat.m[1][1] = 1 - 2 * (x * x + z * z);
    r.mat.m[1][2] = 2 * (y * z - w * x);
    r.mat.m[2][0] = 2 * (x * z - w * y);
    r.mat.m[2][1] = 2 * (y * z + w * x);
    r.mat.m[2][2] = 1 - 2 * (x * x + y * y);
    return r;
}

bool is_identity(const RotationElement& r, double tol) {
    return max_abs_diff(r.mat, Mat3::identity()) <= tol;
}

bool is_involution(const RotationElement& r, double tol) {
    return std::fabs(trace(r.mat) + 1.0) <= tol;
}

bool is_rotation_matrix(const Mat3& m, double tol) {
    if (max_abs_diff(transpose(m) * m, Mat3::identity()) > tol) return false;
    return std::fabs(det(m) - 1.0) <= tol;
}

Vec3 canonical_axis(const Vec3& v, double tol) {
    double lead = 0;
    if (std::fabs(v.x) > tol)
        lead = v.x;
    else if (std::fabs(v.y) > tol)
        lead = v.y;
    else
        lead = v.z;
    return lead < 0 ? -v : v;
}

AxisAngle axis_angle(const RotationElement& r, double tol) {
    if (is_identity(r, tol)) throw NoAxisError("axis_angle: identity rotation has no axis");
    double c = (trace(r.mat) - 1.0) / 2.0;
    c = std::max(-1.0, std::min(1.0, c));
    double angle = std::acos(c);
    const Mat3& m = r.mat;
    Vec3 axis;
    if (M_PI - angle < 1e-4) {
        // skew part vanishes at a half-turn; use (R+I)/2 = v v^T instead
        double b[3] = {(m.m[0][0] + 1) / 2, (m.m[1][1] + 1) / 2, (m.m[2][2] + 1) / 2};
        int j = 0;
        if (b[1] > b[j]) j = 1;
        if (b[2] > b[j]) j = 2;
        Vec3 col = {(m.m[0][j] + (j == 0 ? 1.0 : 0.0)) / 2, (m.m[1][j] + (j == 1 ? 1.0 : 0.0)) / 2,
                    (m.m[2][j] + (j == 2 ? 1.0 : 0.0)) / 2};
        axis = normalized(col);
    } else {
        Vec3 skew = {m.m[2][1] - m.m[1][2], m.m[0][2] - m.m[2][0], m.m[1][0] - m.m[0][1]};
        axis = normalized(skew);
    }
    return {canonical_axis(axis, tol), angle};
}

bool commutes(const RotationElement& a, const RotationElement& b, double tol) {
    return max_abs_diff(a.mat * b.mat, b.mat * a.mat) <= tol;
}

namespace {

bool colinear(const Vec3& u, const Vec3& v, double tol) {
    return 1.0 - std::fabs(dot(u, v)) <= tol;
}

bool perpendicular(const Vec3& u, const Vec3& v, double tol) {
    return std::fabs(dot(u, v)) <= tol;
}

} // namespace

PairStructure pair_structure(const RotationElement& a, const RotationElement& b, double tol) {
    if (!commutes(a, b, tol)) throw NonCommutingError("pair_structure: pair does not commute");
    bool ia = is_identity(a, tol), ib = is_identity(b, tol);
    if (ia && ib) return {PairKind::CommonAxis, Vec3{0, 0, 1}, Vec3{}};
    if (ia) return {PairKind::CommonAxis, axis_angle(b, tol).axis, Vec3{}};
    if (ib) return {PairKind::CommonAxis, axis_angle(a, tol).axis, Vec3{}};
    AxisAngle aa = axis_angle(a, tol), ab = axis_angle(b, tol);
    if (colinear(aa.axis, ab.axis, tol)) return {PairKind::CommonAxis, aa.axis, Vec3{}};
    // distinct axis lines force two half-turns about perpendicular axes;
    // anything else that slipped past the commutator test is rejected
    if (!is_involution(a, tol) || !is_involution(b, tol))
        throw NonCommutingError("pair_structure: distinct axes but not two half-turns");
    if (!perpendicular(aa.axis, ab.axis, tol))
        throw NonCommutingError("pair_structure: half-turn axes neither colinear nor perpendicular");
    return {PairKind::PerpInvolutions, aa.axis, ab.axis};
}

RotationElement rotation_about(const Vec3& axis, double angle) {
    double h = angle / 2.0;
    double s = std::sin(h);
    Quat q{std::cos(h), s * axis.x, s * axis.y, s * axis.z};
    return project(q);
}

RotationElement involution_about(const Vec3& v) {
    RotationElement r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.mat.m[i][j] = (i == j ? -1.0 : 0.0);
    double a[3] = {v.x, v.y, v.z};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.mat.m[i][j] += 2.0 * a[i] * a[j];
    return r;
}

std::vector<RotationElement> sample_plus(int n, std::uint64_t seed) {
    if (n < 1) throw RangeError("sample_plus: n must be positive");
    Rng rng(seed);
    Vec3 axis = rng.unit_vec3();
    std::vector<RotationElement> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(rotation_about(axis, rng.uniform(0, 2 * M_PI)));
    return out;
}

std::vector<RotationElement> sample_minus(const std::string& pattern, std::uint64_t seed) {
    if (!is_valid_minus_pattern(pattern))
        throw InvalidPatternError("sample_minus: pattern needs two distinct non-E symbols");
    Rng rng(seed);
    Vec3 v1, v2;
    rng.frame(v1, v2);
    Vec3 v3 = cross(v1, v2);
    std::vector<RotationElement> out;
    out.reserve(pattern.size());
    RotationElement id{Mat3::identity()};
    for (char c : pattern) {
        switch (c) {
        case 'E': out.push_back(id); break;
        case 'X': out.push_back(involution_about(v1)); break;
        case 'Y': out.push_back(involution_about(v2)); break;
        case 'Z': out.push_back(involution_about(v3)); break;
        default: throw InvalidPatternError("sample_minus: bad symbol");
        }
    }
    return out;
}

} // namespace comtop
