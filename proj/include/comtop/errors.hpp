#pragma once

#include <stdexcept>
#include <string>

namespace comtop {

// One exception type per failure condition so callers can catch precisely.

struct NormError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// axis extraction requested for the identity rotation
struct NoAxisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonCommutingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// pattern fails the two-distinct-involutions requirement (or has bad symbols)
struct InvalidPatternError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// axis relations neither colinear nor perpendicular within tolerance
struct AmbiguousError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// input exceeds a documented feasibility cap (enumeration size, model size)
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// input outside the mathematical domain of the operation
struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// coset enumeration would exceed max_cosets
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// chain complex failed the boundary-of-boundary check
struct BoundaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingAttachingWords : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnitaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace comtop
