#include "gaaf/rotor.hpp"

#include <cmath>

namespace gaaf {

namespace {

void require_grade1(const Multivector& a, const char* what) {
    if (!is_pure_grade(a, 1)) throw Error(std::string(what) + " must be a pure 1-vector");
}

}  // namespace

Multivector vector_inverse(const Multivector& a) {
    require_grade1(a, "vector_inverse argument");
    // a^2 is a scalar for any 1-vector.
    const double a2 = scalar_product(a, a);
    if (std::abs(a2) <= kInvertTolerance)
        throw NullVector("1-vector has no inverse: a^2 is zero within tolerance");
    return a * (1.0 / a2);
}

Multivector versor_inverse(const Multivector& v, std::span<const Multivector> factors) {
    if (factors.empty()) throw Error("versor_inverse needs at least one factor");
    Multivector product = Multivector::scalar(v.signature(), 1.0);
    for (const Multivector& f : factors) {
        require_grade1(f, "versor factor");
        product = product * f;
    }
    // Metric-free comparison so pseudo-Euclidean versors are handled too.
    const Multivector residual = product - v;
    double worst = 0.0, scale = 1.0;
    for (BladeBits b = 0; b < static_cast<BladeBits>(v.dim()); ++b) {
        worst = std::max(worst, std::abs(residual[b]));
        scale = std::max(scale, std::abs(v[b]));
    }
    if (worst > 1e-9 * scale)
        throw FactorizationMismatch("supplied factors do not multiply to the versor");

    Multivector inv = Multivector::scalar(v.signature(), 1.0);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) inv = inv * vector_inverse(*it);
    return inv;
}

Multivector rotor_from_vectors(const Multivector& a, const Multivector& b) {
    require_grade1(a, "rotor factor");
    require_grade1(b, "rotor factor");
    if (std::abs(magnitude_sq(a) - 1.0) > kInvertTolerance ||
        std::abs(magnitude_sq(b) - 1.0) > kInvertTolerance)
        throw NotUnit("rotor factors must be unit vectors");
    return a * b;
}

Multivector rotate(const Multivector& rotor, const Multivector& x) {
    const Multivector unity = rotor * reverse(rotor) - Multivector::scalar(rotor.signature(), 1.0);
    if (magnitude(unity) > kInvertTolerance) throw NotUnitRotor("rotor must satisfy r ~r = 1");
    return rotor * x * reverse(rotor);
}

}  // namespace gaaf
