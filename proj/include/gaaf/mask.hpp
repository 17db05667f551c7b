#pragma once

#include <bit>
#include <cstdint>

#include "gaaf/multivector.hpp"

namespace gaaf {

/// Subset of blades selecting a subalgebra (or subspace) of the ambient
/// algebra. The named factories below are all closed under the geometric
/// product; arbitrary subsets are representable but get no such guarantee.
struct SubalgebraMask {
    Signature sig;
    std::uint64_t allowed = 0;  // bit b set <=> blade b is in the mask

    bool contains(BladeBits blade) const { return (allowed >> blade) & 1u; }
    int count() const { return std::popcount(allowed); }

    /// True when every coefficient outside the mask is exactly zero.
    bool holds(const Multivector& a) const {
        for (BladeBits b = 0; b < static_cast<BladeBits>(a.dim()); ++b)
            if (!contains(b) && a[b] != 0.0) return false;
        return true;
    }

    friend bool operator==(const SubalgebraMask&, const SubalgebraMask&) = default;
};

/// All 2^n blades of G(R^n).
SubalgebraMask full_mask(const Signature& sig);

/// Even-grade blades: the rotor subalgebra G+(R^n).
SubalgebraMask even_mask(const Signature& sig);

/// {1, gamma_12}: G+(R^2) embedded in the ambient algebra; isomorphic to
/// the complex numbers. Requires n >= 2.
SubalgebraMask complex_mask(const Signature& sig);

/// {1}: the scalars.
SubalgebraMask real_mask(const Signature& sig);

/// Zeros every coefficient outside the mask. Idempotent.
Multivector project_subalgebra(const Multivector& a, const SubalgebraMask& mask);

}  // namespace gaaf
