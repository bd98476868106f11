#include "comtop/lifting.hpp"

#include <cmath>

#include "comtop/rng.hpp"

namespace comtop {

Quat lift_rotation(const RotationElement& r, double tol) {
    if (!is_rotation_matrix(r.mat, tol))
        throw NormError("lift_rotation: input is not a rotation matrix");
    const auto& m = r.mat.m;
    double t = m[0][0] + m[1][1] + m[2][2];
    Quat q;
    // branch on the largest of w^2, x^2, y^2, z^2 for stability
    if (t > 0) {
        double s = std::sqrt(t + 1.0) * 2;
        q.w = s / 4;
        q.x = (m[2][1] - m[1][2]) / s;
        q.y = (m[0][2] - m[2][0]) / s;
        q.z = (m[1][0] - m[0][1]) / s;
    } else if (m[0][0] > m[1][1] && m[0][0] > m[2][2]) {
        double s = std::sqrt(1.0 + m[0][0] - m[1][1] - m[2][2]) * 2;
        q.w = (m[2][1] - m[1][2]) / s;
        q.x = s / 4;
        q.y = (m[0][1] + m[1][0]) / s;
        q.z = (m[0][2] + m[2][0]) / s;
    } else if (m[1][1] > m[2][2]) {
        double s = std::sqrt(1.0 + m[1][1] - m[0][0] - m[2][2]) * 2;
        q.w = (m[0][2] - m[2][0]) / s;
        q.x = (m[0][1] + m[1][0]) / s;
        q.y = s / 4;
        q.z = (m[1][2] + m[2][1]) / s;
    } else {
        double s = std::sqrt(1.0 + m[2][2] - m[0][0] - m[1][1]) * 2;
        q.w = (m[1][0] - m[0][1]) / s;
        q.x = (m[0][2] + m[2][0]) / s;
        q.y = (m[1][2] + m[2][1]) / s;
        q.z = s / 4;
    }
    double nn = norm(q);
    q.w /= nn;
    q.x /= nn;
    q.y /= nn;
    q.z /= nn;
    return q;
}

LiftSet lift_tuple(const std::vector<RotationElement>& tuple, double tol) {
    if (tuple.empty()) throw RangeError("lift_tuple: empty tuple");
    if (tuple.size() > 20) throw BoundError("lift_tuple: sign enumeration capped at n = 20");
    LiftSet ls;
    ls.n = static_cast<int>(tuple.size());
    for (const auto& r : tuple) ls.base.push_back(lift_rotation(r, tol));
    return ls;
}

void for_each_lift(const LiftSet& ls, const std::function<void(const std::vector<Quat>&)>& fn) {
    std::vector<Quat> buf = ls.base;
    std::uint64_t total = std::uint64_t(1) << ls.n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (int i = 0; i < ls.n; ++i)
            buf[static_cast<std::size_t>(i)] =
                (mask >> i) & 1 ? -ls.base[static_cast<std::size_t>(i)]
                                : ls.base[static_cast<std::size_t>(i)];
        fn(buf);
    }
}

std::uint64_t commuting_lift_count(const LiftSet& ls, double tol) {
    if (ls.n <= 12) {
        std::uint64_t count = 0;
        for_each_lift(ls, [&](const std::vector<Quat>& q) {
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = i + 1; j < q.size(); ++j)
                    if (max_abs_diff(q[i] * q[j], q[j] * q[i]) > tol) return;
            ++count;
        });
        return count;
    }
    // signs cancel in q_i q_j vs q_j q_i, so one pairwise pass decides all
    // 2^n sign choices at once
    for (std::size_t i = 0; i < ls.base.size(); ++i)
        for (std::size_t j = i + 1; j < ls.base.size(); ++j)
            if (max_abs_diff(ls.base[i] * ls.base[j], ls.base[j] * ls.base[i]) > tol) return 0;
    return std::uint64_t(1) << ls.n;
}

int lifted_commutator_sign(const RotationElement& a, const RotationElement& b, double tol) {
    if (!commutes(a, b, tol))
        throw NonCommutingError("lifted_commutator_sign: pair does not commute");
    Quat qa = lift_rotation(a, tol), qb = lift_rotation(b, tol);
    Quat c = qa * qb * conj(qa) * conj(qb);
    Quat one{1, 0, 0, 0};
    if (max_abs_diff(c, one) <= 10 * tol) return 1;
    if (max_abs_diff(c, -one) <= 10 * tol) return -1;
    throw NonCommutingError("lifted_commutator_sign: commutator not near a central sign");
}

CMat2 su2_from_quat(const Quat& q) {
    CMat2 m;
    m(0, 0) = cdouble(q.w, q.x);
    m(0, 1) = cdouble(q.y, q.z);
    m(1, 0) = cdouble(-q.y, q.z);
    m(1, 1) = cdouble(q.w, -q.x);
    return m;
}

Quat quat_from_su2(const CMat2& s, double tol) {
    if (max_abs_diff(adjoint(s) * s, CMat2::identity()) > tol ||
        std::abs(det(s) - cdouble(1, 0)) > tol)
        throw NonUnitaryError("quat_from_su2: input not special unitary");
    Quat q;
    q.w = (s(0, 0).real() + s(1, 1).real()) / 2;
    q.x = (s(0, 0).imag() - s(1, 1).imag()) / 2;
    q.y = (s(0, 1).real() - s(1, 0).real()) / 2;
    q.z = (s(0, 1).imag() + s(1, 0).imag()) / 2;
    return q;
}

U2Decomposition decompose_u2(const CMat2& u, double tol) {
    if (max_abs_diff(adjoint(u) * u, CMat2::identity()) > tol)
        throw NonUnitaryError("decompose_u2: input not unitary");
    cdouble d = det(u);
    double theta = std::arg(d) / 2; // in (-pi/2, pi/2]
    if (theta < 0) theta += M_PI;
    U2Decomposition out;
    out.theta = theta;
    out.su2 = cdouble(std::cos(-theta), std::sin(-theta)) * u;
    out.q = quat_from_su2(out.su2, 10 * tol);
    return out;
}

std::pair<CMat2, CMat2> sample_commuting_u2(std::uint64_t seed) {
    Rng rng(seed);
    Quat v{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
    double nn = norm(v);
    while (nn < 1e-6) {
        v = {rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
        nn = norm(v);
    }
    v = {v.w / nn, v.x / nn, v.y / nn, v.z / nn};
    CMat2 vm = su2_from_quat(v);
    CMat2 vmadj = adjoint(vm);
    auto diag_unitary = [&]() {
        CMat2 d;
        double a = rng.uniform(0, 2 * M_PI), b = rng.uniform(0, 2 * M_PI);
        d(0, 0) = cdouble(std::cos(a), std::sin(a));
        d(1, 1) = cdouble(std::cos(b), std::sin(b));
        return d;
    };
    CMat2 u = vm * diag_unitary() * vmadj;
    CMat2 w = vm * diag_unitary() * vmadj;
    return {u, w};
}

} // namespace comtop
