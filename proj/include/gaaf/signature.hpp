#pragma once

#include <compare>

#include "gaaf/errors.hpp"

namespace gaaf {

// Maximum supported base-space dimension. The algebra then has up to
// 2^6 = 64 blades, small enough for fixed-size value semantics.
inline constexpr int kMaxDim = 6;

/// Metric description of a vector space R^{p,q,r}: p basis vectors square
/// to +1, q to -1, r to 0. The generated algebra has dimension 2^(p+q+r).
struct Signature {
    int p = 0;
    int q = 0;
    int r = 0;

    constexpr int n() const { return p + q + r; }
    constexpr int algebra_dim() const { return 1 << n(); }
    constexpr bool euclidean() const { return q == 0 && r == 0; }

    // Square of basis vector gamma_{k+1}, k in [0, n).
    constexpr double metric(int k) const {
        if (k < p) return 1.0;
        if (k < p + q) return -1.0;
        return 0.0;
    }

    friend constexpr bool operator==(const Signature&, const Signature&) = default;
};

inline Signature make_signature(int p, int q, int r) {
    Signature s{p, q, r};
    if (p < 0 || q < 0 || r < 0 || s.n() < 1 || s.n() > kMaxDim)
        throw Error("signature (p,q,r) must satisfy 1 <= p+q+r <= 6 with nonnegative parts");
    return s;
}

/// Euclidean signature R^{n,0,0}, the only kind exercised by the filters.
inline Signature euclidean(int n) { return make_signature(n, 0, 0); }

inline void require_same_signature(const Signature& a, const Signature& b) {
    if (!(a == b)) throw SignatureMismatch("operands have different signatures");
}

}  // namespace gaaf
