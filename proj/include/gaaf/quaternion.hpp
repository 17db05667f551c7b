#pragma once

#include "gaaf/multivector.hpp"

namespace gaaf {

/// Plain quaternion w + xi + yj + zk, used on the far side of the
/// isomorphism with the even subalgebra of G(R^3).
struct Quaternion {
    double w = 0, x = 0, y = 0, z = 0;

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    // Hamilton product: ij = k, jk = i, ki = j.
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    Quaternion conjugate() const { return {w, -x, -y, -z}; }
};

/// Structure-preserving map into the even subalgebra of G(R^3):
/// i -> -gamma_12, j -> -gamma_23, k -> -gamma_31. Products and sums
/// commute with the map; conjugation corresponds to reversion.
Multivector quaternion_map(const Quaternion& h);

/// Inverse of quaternion_map. Throws NotEven when the multivector has
/// odd-grade coefficients above tolerance, or is not from G(R^3).
Quaternion quaternion_unmap(const Multivector& a);

}  // namespace gaaf
