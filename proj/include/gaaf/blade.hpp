#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "gaaf/signature.hpp"

namespace gaaf {

// A basis blade is indexed by a bitset: bit k set means gamma_{k+1} is a
// factor, with factors kept in ascending index order. bits == 0 is the
// scalar blade, bits == 2^n - 1 the pseudoscalar.
using BladeBits = std::uint32_t;

inline int grade(BladeBits b) { return std::popcount(b); }

struct BladeProduct {
    double sign;       // -1, 0 or +1; 0 only when a repeated vector squares to 0
    BladeBits blade;   // always a XOR b
};

/// Product of two basis blades under the given signature. The sign counts
/// the transpositions needed to sort the concatenated factor lists, then
/// applies the metric for every annihilated pair.
BladeProduct blade_product(BladeBits a, BladeBits b, const Signature& sig);

// Reversion sign (-1)^{g(g-1)/2} for a blade of the given grade:
// +,+,-,-,+,+,... as the grade increases.
inline double reversion_sign(int g) { return ((g * (g - 1) / 2) % 2) ? -1.0 : 1.0; }

// Dense sign table for all blade pairs of one signature; the result blade
// of pair (a, b) is always a XOR b.
struct CayleyTable {
    int dim;
    std::array<double, 64 * 64> sign;

    double operator()(BladeBits a, BladeBits b) const { return sign[(a << 6) | b]; }
};

/// Shared per-signature table, built on first use. Thread-safe; the
/// returned reference stays valid for the program lifetime.
const CayleyTable& cayley_table(const Signature& sig);

}  // namespace gaaf
