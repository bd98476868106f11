#pragma once

#include <string>
#include <vector>

#include "comtop/errors.hpp"
#include "comtop/rotations.hpp"

namespace comtop {

// A connected component of the space of commuting n-tuples of rotations is
// either the component of the identity tuple ("plus") or is labeled by a
// pattern of Klein four-group symbols ("minus"). Patterns are strings over
// {E,X,Y,Z}: E marks an identity entry, X/Y/Z mark half-turns about the three
// perpendicular axes of a common frame. Patterns are taken modulo the 6
// relabelings of {X,Y,Z}; the canonical representative has X as its first
// non-E symbol and Y as its first symbol outside {E,X}.
using KleinPattern = std::string;

struct ComponentLabel {
    bool plus = true;
    KleinPattern pattern; // canonical, empty when plus
};

inline bool operator==(const ComponentLabel& a, const ComponentLabel& b) {
    return a.plus == b.plus && a.pattern == b.pattern;
}

// Klein four-group product on symbols, E the identity
char klein_mul(char a, char b);

bool pattern_chars_ok(const KleinPattern& p);

// valid minus pattern: at least two distinct non-E symbols
bool is_valid_minus_pattern(const KleinPattern& p);

bool is_canonical_pattern(const KleinPattern& p);

// canonical representative of the relabeling orbit; InvalidPatternError if invalid
KleinPattern canonicalize(const KleinPattern& p);

// component of a commuting tuple; NonCommutingError / AmbiguousError
ComponentLabel classify(const std::vector<RotationElement>& tuple, double tol = kDefaultTol);

// counts of minus components (equivalently, of canonical valid patterns)
using BigCount = unsigned __int128;
std::string big_to_string(BigCount v);

BigCount count_closed_form(int n); // RangeError n < 1, BoundError n > 62
BigCount count_recurrence(int n);  // same bounds
BigCount count_enumerate(int n);   // BoundError n > 12

// plus first, then canonical minus patterns in lexicographic order (E<X<Y<Z)
std::vector<ComponentLabel> enumerate_components(int n); // BoundError n > 12

std::string label_to_string(const ComponentLabel& l);

} // namespace comtop
