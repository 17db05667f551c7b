#include "gaaf/quaternion.hpp"

#include <cmath>

namespace gaaf {

namespace {

// Internal blades of G(R^3): gamma_12 = 0b011, gamma_13 = 0b101,
// gamma_23 = 0b110. The display bivector gamma_31 is -gamma_13, which is
// where the k <-> -gamma_31 = +gamma_13 sign comes from.
constexpr BladeBits kG12 = 0b011;
constexpr BladeBits kG13 = 0b101;
constexpr BladeBits kG23 = 0b110;

}  // namespace

Multivector quaternion_map(const Quaternion& h) {
    Multivector m(euclidean(3));
    m.at(0) = h.w;
    m.at(kG12) = -h.x;
    m.at(kG23) = -h.y;
    m.at(kG13) = h.z;
    return m;
}

Quaternion quaternion_unmap(const Multivector& a) {
    if (!(a.signature() == euclidean(3)))
        throw NotEven("quaternion correspondence is defined on G(R^3)");
    for (BladeBits b = 0; b < 8u; ++b) {
        if (grade(b) % 2 != 0 && std::abs(a[b]) > kInvertTolerance)
            throw NotEven("multivector has odd-grade components; not in the rotor subalgebra");
    }
    return {a[0], -a[kG12], -a[kG23], a[kG13]};
}

}  // namespace gaaf
