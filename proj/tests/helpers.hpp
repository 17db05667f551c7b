#pragma once

#include <cmath>
#include <random>

#include "gaaf/array.hpp"
#include "gaaf/mask.hpp"

namespace gaaf::testing {

// Relative closeness on the coefficient sup norm, with a floor of 1 so
// near-zero values compare absolutely.
inline double max_abs(const Multivector& a) {
    double m = 0.0;
    for (BladeBits b = 0; b < static_cast<BladeBits>(a.dim()); ++b)
        m = std::max(m, std::abs(a[b]));
    return m;
}

inline bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool mv_close(const Multivector& a, const Multivector& b, double tol) {
    const double scale = std::max({1.0, max_abs(a), max_abs(b)});
    for (BladeBits i = 0; i < static_cast<BladeBits>(a.dim()); ++i)
        if (std::abs(a[i] - b[i]) > tol * scale) return false;
    return true;
}

inline bool mv_equal(const Multivector& a, const Multivector& b) {
    for (BladeBits i = 0; i < static_cast<BladeBits>(a.dim()); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

inline bool array_close(const MultivectorArray& a, const MultivectorArray& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (!mv_close(a[j], b[j], tol)) return false;
    return true;
}

// Dense random multivector with coefficients uniform in [-1, 1].
inline Multivector random_mv(const Signature& sig, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Multivector m(sig);
    for (BladeBits b = 0; b < static_cast<BladeBits>(sig.algebra_dim()); ++b) m.at(b) = dist(rng);
    return m;
}

inline Multivector random_in_mask(const SubalgebraMask& mask, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Multivector m(mask.sig);
    for (BladeBits b = 0; b < static_cast<BladeBits>(m.dim()); ++b)
        if (mask.contains(b)) m.at(b) = dist(rng);
    return m;
}

inline Multivector random_vector(const Signature& sig, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Multivector m(sig);
    for (int k = 0; k < sig.n(); ++k) m.at(1u << k) = dist(rng);
    return m;
}

inline MultivectorArray random_array(const SubalgebraMask& mask, std::size_t taps,
                                     std::mt19937_64& rng) {
    MultivectorArray u(mask.sig, taps);
    for (std::size_t j = 0; j < taps; ++j) u[j] = random_in_mask(mask, rng);
    return u;
}

}  // namespace gaaf::testing
