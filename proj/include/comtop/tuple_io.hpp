#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "comtop/components.hpp"
#include "comtop/rotations.hpp"

namespace comtop {

struct TupleRecord {
    int n = 0;
    std::vector<RotationElement> elements;
};

// Accepts elements of type "matrix" (rows), "quaternion" ([w,x,y,z], unit
// within tol) or "axis_angle" (axis + radians). Throws NormError for bad
// norms, std::invalid_argument for malformed documents.
TupleRecord tuple_from_json(const nlohmann::json& j, double tol = kDefaultTol);

nlohmann::json tuple_to_json(const TupleRecord& t);

// canonical textual form: matrix elements only, entries printed with 17
// significant digits so the text round-trips bit-exactly
std::string tuple_to_json_string(const TupleRecord& t);

nlohmann::json label_to_json(const ComponentLabel& l);
ComponentLabel label_from_json(const nlohmann::json& j);

} // namespace comtop
