#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "comtop/errors.hpp"
#include "comtop/linalg.hpp"
#include "comtop/rotations.hpp"

namespace comtop {

// One quaternion lift per tuple entry; the full preimage under the double
// cover is the 2^n sign choices on these.
struct LiftSet {
    int n = 0;
    std::vector<Quat> base;
};

// stable matrix -> quaternion conversion (largest-component branch)
Quat lift_rotation(const RotationElement& r, double tol = kDefaultTol);

LiftSet lift_tuple(const std::vector<RotationElement>& tuple,
                   double tol = kDefaultTol); // BoundError n > 20

// visits all 2^n sign choices in a fixed order (bit i flips entry i)
void for_each_lift(const LiftSet& ls, const std::function<void(const std::vector<Quat>&)>& fn);

// Number of sign choices whose lifts commute pairwise. Whether two lifts
// commute does not depend on the sign choice (signs cancel in q_i q_j vs
// q_j q_i), so the count is 2^n or 0; small n is checked by direct
// enumeration, large n via the pairwise criterion.
std::uint64_t commuting_lift_count(const LiftSet& ls, double tol = kDefaultTol);

// +1 or -1: the value of the lifted commutator q_a q_b q_a^-1 q_b^-1, which
// is a central sign whenever a and b commute downstairs. Independent of the
// choice of lifts. Throws NonCommutingError if a, b do not commute.
int lifted_commutator_sign(const RotationElement& a, const RotationElement& b,
                           double tol = kDefaultTol);

// unitary 2x2 = phase * special unitary; theta in [0, pi) is half the
// principal argument of the determinant
struct U2Decomposition {
    double theta = 0;
    CMat2 su2;
    Quat q; // quaternion form of the special unitary part
};

U2Decomposition decompose_u2(const CMat2& u, double tol = kDefaultTol); // NonUnitaryError

CMat2 su2_from_quat(const Quat& q);
Quat quat_from_su2(const CMat2& s, double tol = kDefaultTol);

// commuting pair of unitary 2x2 matrices: conjugates of random diagonal
// unitaries by one random unitary
std::pair<CMat2, CMat2> sample_commuting_u2(std::uint64_t seed);

} // namespace comtop
