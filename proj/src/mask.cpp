#include "gaaf/mask.hpp"

namespace gaaf {

SubalgebraMask full_mask(const Signature& sig) {
    const int dim = sig.algebra_dim();
    std::uint64_t bits = (dim == 64) ? ~0ull : ((1ull << dim) - 1);
    return {sig, bits};
}

SubalgebraMask even_mask(const Signature& sig) {
    std::uint64_t bits = 0;
    for (BladeBits b = 0; b < static_cast<BladeBits>(sig.algebra_dim()); ++b)
        if (grade(b) % 2 == 0) bits |= 1ull << b;
    return {sig, bits};
}

SubalgebraMask complex_mask(const Signature& sig) {
    if (sig.n() < 2) throw Error("complex mask needs at least two basis vectors");
    // Blade 0b011 is gamma_12.
    return {sig, (1ull << 0) | (1ull << 3)};
}

SubalgebraMask real_mask(const Signature& sig) { return {sig, 1ull}; }

Multivector project_subalgebra(const Multivector& a, const SubalgebraMask& mask) {
    require_same_signature(a.signature(), mask.sig);
    Multivector out(a.signature());
    for (BladeBits b = 0; b < static_cast<BladeBits>(a.dim()); ++b)
        if (mask.contains(b)) out.at(b) = a[b];
    return out;
}

}  // namespace gaaf
