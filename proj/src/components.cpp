#include "comtop/components.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace comtop {

char klein_mul(char a, char b) {
    if (!pattern_chars_ok(std::string(1, a)) || !pattern_chars_ok(std::string(1, b)))
        throw InvalidPatternError("klein_mul: bad symbol");
    if (a == 'E') return b;
    if (b == 'E') return a;
    if (a == b) return 'E';
    // product of two distinct involutions is the third
    for (char c : {'X', 'Y', 'Z'})
        if (c != a && c != b) return c;
    return 'E'; // unreachable
}

bool pattern_chars_ok(const KleinPattern& p) {
    return std::all_of(p.begin(), p.end(),
                       [](char c) { return c == 'E' || c == 'X' || c == 'Y' || c == 'Z'; });
}

bool is_valid_minus_pattern(const KleinPattern& p) {
    if (!pattern_chars_ok(p)) return false;
    char first = 0;
    for (char c : p) {
        if (c == 'E') continue;
        if (first == 0)
            first = c;
        else if (c != first)
            return true;
    }
    return false;
}

bool is_canonical_pattern(const KleinPattern& p) {
    if (!pattern_chars_ok(p)) throw InvalidPatternError("is_canonical_pattern: bad symbol");
    bool seen_x = false, seen_y = false;
    for (char c : p) {
        if (c == 'E') continue;
        if (!seen_x) {
            if (c != 'X') return false;
            seen_x = true;
        } else if (!seen_y && c != 'X') {
            if (c != 'Y') return false;
            seen_y = true;
        }
    }
    return true;
}

KleinPattern canonicalize(const KleinPattern& p) {
    if (!is_valid_minus_pattern(p))
        throw InvalidPatternError("canonicalize: not a valid minus pattern");
    // relabel by first occurrence: first non-E symbol becomes X, the next
    // distinct one Y, the remaining one Z
    char map[3] = {0, 0, 0}; // image of X, Y, Z
    auto slot = [&](char c) -> char& { return map[c - 'X']; };
    const char targets[3] = {'X', 'Y', 'Z'};
    int assigned = 0;
    for (char c : p) {
        if (c == 'E') continue;
        if (slot(c) == 0) slot(c) = targets[assigned++];
    }
    for (char c : {'X', 'Y', 'Z'})
        if (slot(c) == 0) slot(c) = targets[assigned++];
    KleinPattern out = p;
    for (char& c : out)
        if (c != 'E') c = slot(c);
    return out;
}

ComponentLabel classify(const std::vector<RotationElement>& tuple, double tol) {
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (!commutes(tuple[i], tuple[j], tol))
                throw NonCommutingError("classify: entries do not commute pairwise");

    std::vector<int> nontrivial;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        if (!is_identity(tuple[i], tol)) nontrivial.push_back(static_cast<int>(i));
    if (nontrivial.empty()) return {true, ""};

    auto axis_of = [&](int i) { return axis_angle(tuple[static_cast<std::size_t>(i)], tol).axis; };
    auto near_line = [&](const Vec3& u, const Vec3& v) { return 1.0 - std::fabs(dot(u, v)) <= tol; };

    Vec3 ref = axis_of(nontrivial[0]);
    bool common = true;
    for (int i : nontrivial)
        if (!near_line(ref, axis_of(i))) {
            common = false;
            break;
        }
    if (common) return {true, ""};

    // minus component: every nontrivial entry must be a half-turn about one
    // of two perpendicular lines or their cross product
    for (int i : nontrivial)
        if (!is_involution(tuple[static_cast<std::size_t>(i)], tol))
            throw AmbiguousError("classify: non-involution entry off the common axis");

    Vec3 v1 = ref, v2{}, v3{};
    bool have2 = false;
    KleinPattern pat(tuple.size(), 'E');
    for (int i : nontrivial) {
        Vec3 a = axis_of(i);
        if (near_line(v1, a)) {
            pat[static_cast<std::size_t>(i)] = 'X';
            continue;
        }
        if (!have2) {
            if (std::fabs(dot(v1, a)) > tol)
                throw AmbiguousError("classify: axes neither colinear nor perpendicular");
            v2 = a;
            v3 = cross(v1, v2);
            have2 = true;
        }
        if (near_line(v2, a))
            pat[static_cast<std::size_t>(i)] = 'Y';
        else if (near_line(v3, a))
            pat[static_cast<std::size_t>(i)] = 'Z';
        else
            throw AmbiguousError("classify: axis outside the frame");
    }
    return {false, pat};
}

std::string big_to_string(BigCount v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

BigCount p2(int k) { return BigCount(1) << k; }
BigCount p4(int k) { return BigCount(1) << (2 * k); }

void check_count_range(int n, const char* who) {
    if (n < 1) throw RangeError(std::string(who) + ": n must be positive");
    if (n > 62) throw BoundError(std::string(who) + ": n above 128-bit range");
}

} // namespace

BigCount count_closed_form(int n) {
    check_count_range(n, "count_closed_form");
    BigCount num = p4(n) - 3 * p2(n) + 2;
    if (num % 6 != 0) throw std::logic_error("count_closed_form: 6 does not divide");
    BigCount v = num / 6;
    // the parity-split printed forms must agree with the single closed form
    BigCount split;
    if (n % 2 == 0) {
        split = (p4(n) - 3 * p2(n) + 2) / 6;
    } else {
        BigCount a = p4(n - 1) - 1;
        if (a % 3 != 0) throw std::logic_error("count_closed_form: 3 does not divide");
        split = 2 * (a / 3) - p2(n - 1) + 1;
    }
    if (split != v) throw std::logic_error("count_closed_form: parity forms disagree");
    return v;
}

BigCount count_recurrence(int n) {
    check_count_range(n, "count_recurrence");
    if (n == 1) return 0;
    if (n == 2) return 1;
    BigCount xm2 = 0, xm1 = 0, x = 0; // x_{k-2}, x_{k-1}, x_k
    xm2 = 0;                          // x_1
    xm1 = 1;                          // x_2
    for (int k = 3; k <= n; ++k) {
        BigCount gap = p4(k - 2) - p2(k - 2);
        if (gap % 2 != 0) throw std::logic_error("count_recurrence: odd gap");
        x = p4(k - 2) + 3 * (gap / 2) + xm2;
        xm2 = xm1;
        xm1 = x;
    }
    return x;
}

BigCount count_enumerate(int n) {
    if (n < 1) throw RangeError("count_enumerate: n must be positive");
    if (n > 12) throw BoundError("count_enumerate: exhaustive scan capped at n = 12");
    BigCount total = 0;
    const char sym[4] = {'E', 'X', 'Y', 'Z'};
    KleinPattern pat(static_cast<std::size_t>(n), 'E');
    std::uint64_t limit = std::uint64_t(1) << (2 * n);
    for (std::uint64_t code = 0; code < limit; ++code) {
        std::uint64_t c = code;
        for (int i = n - 1; i >= 0; --i) {
            pat[static_cast<std::size_t>(i)] = sym[c & 3];
            c >>= 2;
        }
        if (is_valid_minus_pattern(pat) && is_canonical_pattern(pat)) ++total;
    }
    return total;
}

std::vector<ComponentLabel> enumerate_components(int n) {
    if (n < 1) throw RangeError("enumerate_components: n must be positive");
    if (n > 12) throw BoundError("enumerate_components: exhaustive scan capped at n = 12");
    std::vector<ComponentLabel> out;
    out.push_back({true, ""});
    const char sym[4] = {'E', 'X', 'Y', 'Z'};
    KleinPattern pat(static_cast<std::size_t>(n), 'E');
    std::uint64_t limit = std::uint64_t(1) << (2 * n);
    // code order is lexicographic because symbols are encoded E<X<Y<Z
    for (std::uint64_t code = 0; code < limit; ++code) {
        std::uint64_t c = code;
        for (int i = n - 1; i >= 0; --i) {
            pat[static_cast<std::size_t>(i)] = sym[c & 3];
            c >>= 2;
        }
        if (is_valid_minus_pattern(pat) && is_canonical_pattern(pat)) out.push_back({false, pat});
    }
    return out;
}

std::string label_to_string(const ComponentLabel& l) {
    return l.plus ? "plus" : "minus " + l.pattern;
}

} // namespace comtop
