#include "comtop/tuple_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace comtop {

using nlohmann::json;

namespace {

Vec3 vec3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a 3-vector");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

RotationElement element_from_json(const json& j, double tol) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("element needs a \"type\" field");
    std::string type = j.at("type").get<std::string>();
    if (type == "matrix") {
        const json& rows = j.at("rows");
        if (!rows.is_array() || rows.size() != 3)
            throw std::invalid_argument("matrix needs 3 rows");
        RotationElement r;
        for (int i = 0; i < 3; ++i) {
            const json& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || row.size() != 3)
                throw std::invalid_argument("matrix rows need 3 entries");
            for (int k = 0; k < 3; ++k) r.mat.m[i][k] = row[static_cast<std::size_t>(k)].get<double>();
        }
        if (!is_rotation_matrix(r.mat, tol))
            throw NormError("matrix element is not a rotation within tolerance");
        return r;
    }
    if (type == "quaternion") {
        const json& q = j.at("q");
        if (!q.is_array() || q.size() != 4)
            throw std::invalid_argument("quaternion needs [w,x,y,z]");
        return project(Quat{q[0].get<double>(), q[1].get<double>(), q[2].get<double>(),
                            q[3].get<double>()},
                       tol);
    }
    if (type == "axis_angle") {
        Vec3 axis = vec3_from_json(j.at("axis"));
        double n = norm(axis);
        if (n < 1e-12) throw NormError("axis_angle element has a zero axis");
        return rotation_about({axis.x / n, axis.y / n, axis.z / n}, j.at("angle").get<double>());
    }
    throw std::invalid_argument("unknown element type \"" + type + "\"");
}

} // namespace

TupleRecord tuple_from_json(const json& j, double tol) {
    if (!j.is_object()) throw std::invalid_argument("tuple record must be an object");
    TupleRecord t;
    t.n = j.at("n").get<int>();
    const json& els = j.at("elements");
    if (!els.is_array() || static_cast<int>(els.size()) != t.n)
        throw std::invalid_argument("\"elements\" length must equal n");
    for (const json& e : els) t.elements.push_back(element_from_json(e, tol));
    return t;
}

json tuple_to_json(const TupleRecord& t) {
    json els = json::array();
    for (const auto& r : t.elements) {
        json rows = json::array();
        for (int i = 0; i < 3; ++i)
            rows.push_back({r.mat.m[i][0], r.mat.m[i][1], r.mat.m[i][2]});
        els.push_back({{"type", "matrix"}, {"rows", rows}});
    }
    return {{"n", t.n}, {"elements", els}};
}

std::string tuple_to_json_string(const TupleRecord& t) {
    auto num = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    std::string s = "{\"n\":" + std::to_string(t.n) + ",\"elements\":[";
    for (std::size_t e = 0; e < t.elements.size(); ++e) {
        if (e) s += ",";
        s += "{\"type\":\"matrix\",\"rows\":[";
        for (int i = 0; i < 3; ++i) {
            if (i) s += ",";
            s += "[";
            for (int k = 0; k < 3; ++k) {
                if (k) s += ",";
                s += num(t.elements[e].mat.m[i][k]);
            }
            s += "]";
        }
        s += "]}";
    }
    s += "]}";
    return s;
}

json label_to_json(const ComponentLabel& l) {
    if (l.plus) return {{"component", "plus"}};
    return {{"component", "minus"}, {"pattern", l.pattern}};
}

ComponentLabel label_from_json(const json& j) {
    std::string c = j.at("component").get<std::string>();
    if (c == "plus") return {true, ""};
    if (c != "minus") throw std::invalid_argument("component must be \"plus\" or \"minus\"");
    KleinPattern p = j.at("pattern").get<std::string>();
    if (!is_valid_minus_pattern(p))
        throw InvalidPatternError("label pattern is not a valid minus pattern");
    return {false, p};
}

} // namespace comtop
