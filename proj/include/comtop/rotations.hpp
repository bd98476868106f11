#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "comtop/errors.hpp"
#include "comtop/linalg.hpp"

namespace comtop {

// element of the rotation group, stored as an orthogonal matrix with det +1
struct RotationElement {
    Mat3 mat;
};

struct AxisAngle {
    Vec3 axis;    // unit, canonical sign (first coordinate above tol is positive)
    double angle; // in (0, pi]
};

// How a commuting pair can sit inside the rotation group: either both
// rotations fix a common axis line, or both are half-turns about
// perpendicular axes.
enum class PairKind { CommonAxis, PerpInvolutions };

struct PairStructure {
    PairKind kind;
    Vec3 axis;  // CommonAxis: the shared line; PerpInvolutions: first axis
    Vec3 axis2; // PerpInvolutions only: second axis
};

// quaternion -> rotation matrix (the 2:1 covering map). q must be unit within tol.
RotationElement project(const Quat& q, double tol = kDefaultTol);

// throws NoAxisError on the identity; near angle pi the axis is recovered
// from the symmetric part, elsewhere from the skew part
AxisAngle axis_angle(const RotationElement& r, double tol = kDefaultTol);

bool is_identity(const RotationElement& r, double tol = kDefaultTol);

// half-turn test: trace within tol of -1
bool is_involution(const RotationElement& r, double tol = kDefaultTol);

bool is_rotation_matrix(const Mat3& m, double tol = kDefaultTol);

bool commutes(const RotationElement& a, const RotationElement& b, double tol = kDefaultTol);

// structure of a commuting pair; throws NonCommutingError, including for
// near-degenerate inputs whose axes are neither colinear nor perpendicular
PairStructure pair_structure(const RotationElement& a, const RotationElement& b,
                             double tol = kDefaultTol);

// canonical sign convention for axis vectors
Vec3 canonical_axis(const Vec3& v, double tol = kDefaultTol);

// rotation by angle about a unit axis
RotationElement rotation_about(const Vec3& axis, double angle);

// half-turn about a unit axis: 2 v v^T - I
RotationElement involution_about(const Vec3& axis);

// n rotations about one random axis by random angles; always classifies plus
std::vector<RotationElement> sample_plus(int n, std::uint64_t seed);

// realizes a pattern string over {E,X,Y,Z} positionally: E -> identity and
// X,Y,Z -> half-turns about a random orthonormal frame (v1, v2, v1 x v2).
// Throws InvalidPatternError unless at least two distinct non-E symbols occur.
std::vector<RotationElement> sample_minus(const std::string& pattern, std::uint64_t seed);

} // namespace comtop
