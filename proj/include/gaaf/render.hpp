#pragma once

#include <string>
#include <vector>

#include "gaaf/multivector.hpp"

namespace gaaf {

// Display basis element: a canonical blade with a presentation sign and
// name. For n = 3 the basis order is {1, γ1, γ2, γ3, γ12, γ23, γ31, I}
// with γ31 = -γ13; every other dimension lists blades grade-major in
// ascending index order under their canonical names.
struct DisplayBlade {
    BladeBits blade;
    double sign;      // display coefficient = sign * internal coefficient
    std::string name; // "1" for the scalar slot
};

std::vector<DisplayBlade> display_basis(const Signature& sig);

/// Shortest round-trip decimal text for a double.
std::string format_double(double value);

/// Human-readable multivector in the display basis, e.g.
/// "0.55 + 1γ2 + 2γ3 + 0.71γ12 + 1.3γ23 + 4.5γ31 + 3I". Zero terms are
/// omitted; the zero multivector renders as "0".
std::string render(const Multivector& a);

/// The 2^n x 2^n basis-blade multiplication table in the display basis,
/// cells like "γ12" or "-γ31", with a header row and column.
std::string render_cayley_table(int n);

}  // namespace gaaf
