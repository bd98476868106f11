#include <cmath>
#include <vector>

#include "doctest.h"

#include "comtop/components.hpp"
#include "comtop/lifting.hpp"
#include "comtop/rng.hpp"
#include "comtop/rotations.hpp"

using namespace comtop;

namespace {

Quat random_unit_quat(Rng& rng) {
    for (;;) {
        Quat q{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
        double n = norm(q);
        if (n > 1e-6) return {q.w / n, q.x / n, q.y / n, q.z / n};
    }
}

bool quat_is_pm_one(const Quat& q, double tol) {
    return max_abs_diff(q, Quat{1, 0, 0, 0}) <= tol ||
           max_abs_diff(q, Quat{-1, 0, 0, 0}) <= tol;
}

} // namespace

TEST_SUITE("lifting") {

TEST_CASE("matrix to quaternion and back") {
    Rng rng(8086);
    for (int it = 0; it < 300; ++it) {
        Quat q = random_unit_quat(rng);
        RotationElement r = project(q);
        Quat lift = lift_rotation(r);
        CHECK(std::fabs(norm(lift) - 1.0) <= 10 * kDefaultTol);
        CHECK(max_abs_diff(project(lift).mat, r.mat) <= 10 * kDefaultTol);
        // the lift is one of the two preimages
        CHECK((max_abs_diff(lift, q) <= 1e-7 || max_abs_diff(lift, -q) <= 1e-7));
    }
    Mat3 scaled = Mat3::identity();
    scaled.m[1][1] = 1.5;
    CHECK_THROWS_AS(lift_rotation(RotationElement{scaled}), NormError);
}

TEST_CASE("tuple lifts and the sign enumeration") {
    CHECK_THROWS_AS(lift_tuple({}), RangeError);
    std::vector<RotationElement> many(21, RotationElement{Mat3::identity()});
    CHECK_THROWS_AS(lift_tuple(many), BoundError);

    LiftSet ls = lift_tuple(sample_plus(2, 5));
    int visits = 0;
    std::vector<std::vector<Quat>> seen;
    for_each_lift(ls, [&](const std::vector<Quat>& lifts) {
        ++visits;
        seen.push_back(lifts);
    });
    CHECK(visits == 4);
    REQUIRE(seen.size() == 4);
    CHECK(max_abs_diff(seen[0][0], ls.base[0]) == 0.0);
    CHECK(max_abs_diff(seen[1][0], -ls.base[0]) == 0.0);
    CHECK(max_abs_diff(seen[2][1], -ls.base[1]) == 0.0);
}

TEST_CASE("counting commuting lifts") {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            LiftSet ls = lift_tuple(sample_plus(n, seed));
            CHECK(commuting_lift_count(ls) == (std::uint64_t(1) << n));
        }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        CHECK(commuting_lift_count(lift_tuple(sample_minus("XY", seed))) == 0);
        CHECK(commuting_lift_count(lift_tuple(sample_minus("XYZ", seed))) == 0);
        CHECK(commuting_lift_count(lift_tuple(sample_minus("EXY", seed))) == 0);
    }

    // independent recount through the explicit enumeration
    LiftSet five = lift_tuple(sample_plus(5, 99));
    std::uint64_t direct = 0;
    for_each_lift(five, [&](const std::vector<Quat>& lifts) {
        for (std::size_t i = 0; i < lifts.size(); ++i)
            for (std::size_t j = i + 1; j < lifts.size(); ++j)
                if (max_abs_diff(lifts[i] * lifts[j], lifts[j] * lifts[i]) > 10 * kDefaultTol)
                    return;
        ++direct;
    });
    CHECK(direct == commuting_lift_count(five));

    // past the direct-enumeration cutoff the pairwise criterion takes over
    LiftSet wide = lift_tuple(sample_plus(13, 3));
    CHECK(commuting_lift_count(wide) == (std::uint64_t(1) << 13));
}

TEST_CASE("commutator sign detects the component") {
    RotationElement ix = involution_about(Vec3{1, 0, 0});
    RotationElement iy = involution_about(Vec3{0, 1, 0});
    CHECK(lifted_commutator_sign(ix, iy) == -1);
    CHECK(lifted_commutator_sign(rotation_about(Vec3{0, 0, 1}, 0.4),
                                 rotation_about(Vec3{0, 0, 1}, 1.9)) == 1);
    CHECK_THROWS_AS(lifted_commutator_sign(ix, rotation_about(Vec3{0, 0, 1}, 0.7)),
                    NonCommutingError);

    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto plus = sample_plus(3, seed);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                CHECK(lifted_commutator_sign(plus[static_cast<std::size_t>(i)],
                                             plus[static_cast<std::size_t>(j)], 1e-7) == 1);
    }
    // sign is -1 exactly when the two entries are half-turns about different axes
    const KleinPattern pats[4] = {"XY", "XXY", "EXY", "XYZ"};
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        for (const KleinPattern& p : pats) {
            auto tuple = sample_minus(p, seed);
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = i + 1; j < p.size(); ++j) {
                    bool anti = p[i] != 'E' && p[j] != 'E' && p[i] != p[j];
                    CHECK(lifted_commutator_sign(tuple[i], tuple[j], 1e-7) == (anti ? -1 : 1));
                }
        }
}

TEST_CASE("unitary 2x2 decomposition") {
    CMat2 phase;
    phase.m[0][0] = cdouble(0, 1);
    phase.m[1][1] = cdouble(0, 1);
    U2Decomposition d = decompose_u2(phase);
    CHECK(d.theta == doctest::Approx(M_PI / 2));
    CHECK(max_abs_diff(d.su2, CMat2::identity()) <= 10 * kDefaultTol);
    CHECK(max_abs_diff(d.q, Quat{1, 0, 0, 0}) <= 10 * kDefaultTol);

    CMat2 notu;
    notu.m[0][0] = 2.0;
    notu.m[1][1] = 1.0;
    CHECK_THROWS_AS(decompose_u2(notu), NonUnitaryError);
    CHECK_THROWS_AS(quat_from_su2(phase), NonUnitaryError); // determinant -1

    // quaternion form of the special unitary group multiplies like the
    // quaternions themselves
    Quat qi{0, 1, 0, 0}, qj{0, 0, 1, 0}, qk{0, 0, 0, 1};
    CHECK(max_abs_diff(su2_from_quat(qi) * su2_from_quat(qj), su2_from_quat(qk)) <= 1e-12);

    Rng rng(4040);
    for (int it = 0; it < 250; ++it) {
        Quat q = random_unit_quat(rng);
        CHECK(max_abs_diff(quat_from_su2(su2_from_quat(q)), q) <= 10 * kDefaultTol);
        double phi = rng.uniform(0, 2 * M_PI);
        CMat2 u = cdouble(std::cos(phi), std::sin(phi)) * su2_from_quat(q);
        U2Decomposition dec = decompose_u2(u);
        CHECK(dec.theta >= 0);
        CHECK(dec.theta < M_PI);
        CMat2 rebuilt = cdouble(std::cos(dec.theta), std::sin(dec.theta)) * dec.su2;
        CHECK(max_abs_diff(rebuilt, u) <= 10 * kDefaultTol);
    }
}

TEST_CASE("sampled commuting unitary pairs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto [a, b] = sample_commuting_u2(seed);
        CHECK(max_abs_diff(adjoint(a) * a, CMat2::identity()) <= 1e-9);
        CHECK(max_abs_diff(adjoint(b) * b, CMat2::identity()) <= 1e-9);
        CHECK(max_abs_diff(a * b, b * a) <= 1e-9);
        // shared eigenbasis: the special unitary parts commute on the nose,
        // so their quaternion commutator is +1
        Quat qa = decompose_u2(a, 1e-7).q, qb = decompose_u2(b, 1e-7).q;
        Quat c = qa * qb * conj(qa) * conj(qb);
        CHECK(quat_is_pm_one(c, 1e-6));
        CHECK(max_abs_diff(c, Quat{1, 0, 0, 0}) <= 1e-6);
    }
    auto [a1, b1] = sample_commuting_u2(11);
    auto [a2, b2] = sample_commuting_u2(11);
    CHECK(max_abs_diff(a1, a2) == 0.0);
    CHECK(max_abs_diff(b1, b2) == 0.0);
}

} // TEST_SUITE
