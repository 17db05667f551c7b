#include "gaaf/multivector.hpp"

#include <cmath>
#include <string>

namespace gaaf {

namespace {

enum class ProductKind { Geometric, Inner, Outer };

// Shared bilinear expansion over blade pairs. Inner keeps the |p-q|
// grade of each pair's product, outer the p+q grade; the geometric
// product keeps everything. Loop order is fixed so summation is
// deterministic.
template <ProductKind Kind>
Multivector expand(const Multivector& a, const Multivector& b) {
    require_same_signature(a.signature(), b.signature());
    const Signature sig = a.signature();
    const CayleyTable& table = cayley_table(sig);
    const int dim = sig.algebra_dim();

    Multivector out(sig);
    for (BladeBits i = 0; i < static_cast<BladeBits>(dim); ++i) {
        const double av = a[i];
        if (av == 0.0) continue;
        for (BladeBits j = 0; j < static_cast<BladeBits>(dim); ++j) {
            const double bv = b[j];
            if (bv == 0.0) continue;
            const double sign = table(i, j);
            if (sign == 0.0) continue;
            const BladeBits blade = i ^ j;
            if constexpr (Kind == ProductKind::Inner) {
                if (grade(blade) != std::abs(grade(i) - grade(j))) continue;
            } else if constexpr (Kind == ProductKind::Outer) {
                if (grade(blade) != grade(i) + grade(j)) continue;
            }
            out.at(blade) += sign * av * bv;
        }
    }
    return out;
}

}  // namespace

Multivector geometric_product(const Multivector& a, const Multivector& b) {
    return expand<ProductKind::Geometric>(a, b);
}

Multivector inner_product(const Multivector& a, const Multivector& b) {
    return expand<ProductKind::Inner>(a, b);
}

Multivector outer_product(const Multivector& a, const Multivector& b) {
    return expand<ProductKind::Outer>(a, b);
}

Multivector grade_projection(const Multivector& a, int g) {
    const int n = a.signature().n();
    if (g < 0 || g > n)
        throw GradeOutOfRange("grade " + std::to_string(g) + " out of range [0, " +
                              std::to_string(n) + "]");
    Multivector out(a.signature());
    for (BladeBits b = 0; b < static_cast<BladeBits>(a.dim()); ++b)
        if (grade(b) == g) out.at(b) = a[b];
    return out;
}

Multivector reverse(const Multivector& a) {
    Multivector out(a.signature());
    for (BladeBits b = 0; b < static_cast<BladeBits>(a.dim()); ++b)
        out.at(b) = reversion_sign(grade(b)) * a[b];
    return out;
}

double scalar_product(const Multivector& a, const Multivector& b) {
    require_same_signature(a.signature(), b.signature());
    const CayleyTable& table = cayley_table(a.signature());
    // Only pairs with i == j land on the scalar blade.
    double acc = 0.0;
    for (BladeBits i = 0; i < static_cast<BladeBits>(a.dim()); ++i)
        acc += table(i, i) * a[i] * b[i];
    return acc;
}

double magnitude_sq(const Multivector& a) {
    if (!a.signature().euclidean())
        throw NonEuclidean("magnitude requires a Euclidean signature (q = r = 0)");
    double acc = 0.0;
    for (BladeBits b = 0; b < static_cast<BladeBits>(a.dim()); ++b) acc += a[b] * a[b];
    return acc;
}

double magnitude(const Multivector& a) { return std::sqrt(magnitude_sq(a)); }

bool is_pure_grade(const Multivector& a, int g) {
    for (BladeBits b = 0; b < static_cast<BladeBits>(a.dim()); ++b)
        if (grade(b) != g && a[b] != 0.0) return false;
    return true;
}

}  // namespace gaaf
