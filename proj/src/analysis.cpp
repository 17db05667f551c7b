#include "gaaf/analysis.hpp"

#include <string>

#include "gaaf/render.hpp"

namespace gaaf {

namespace {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long num = 1;
    for (int i = 0; i < k; ++i) num = num * (n - i) / (i + 1);
    return num;
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw Error(std::string(what) + " must be positive");
}

}  // namespace

AlgebraDims dims_full(int n) {
    make_signature(n, 0, 0);
    return {1 << n};
}

AlgebraDims dims_even(int n) {
    make_signature(n, 0, 0);
    int dim = 0;
    for (int k = 0; 2 * k <= n; ++k) dim += static_cast<int>(binomial(n, 2 * k));
    return {dim};
}

AlgebraDims dims_grade(int n, int g) {
    make_signature(n, 0, 0);
    if (g < 0 || g > n) throw GradeOutOfRange("grade out of range for dims_grade");
    return {static_cast<int>(binomial(n, g))};
}

double noise_energy(const AlgebraDims& dims, double sigma_v2) {
    require_positive(static_cast<double>(dims.dim), "subalgebra dimension");
    if (sigma_v2 < 0.0) throw Error("noise variance must be nonnegative");
    return dims.dim * sigma_v2;
}

double regressor_energy(const AlgebraDims& dims, int taps, double sigma_u2) {
    require_positive(static_cast<double>(dims.dim), "subalgebra dimension");
    require_positive(static_cast<double>(taps), "tap count");
    require_positive(sigma_u2, "regressor variance");
    return taps * dims.dim * sigma_u2;
}

double stability_margin(const TheoryInputs& t) {
    return 2.0 - t.mu * regressor_energy(t.dims, t.taps, t.sigma_u2);
}

double emse_theory(const TheoryInputs& t) {
    require_positive(t.mu, "step size");
    if (t.sigma_v2 < 0.0) throw Error("noise variance must be nonnegative");
    const double margin = stability_margin(t);
    if (margin <= 0.0)
        throw Unstable("stability condition violated: 2 - mu*M*dim*sigma_u2 = " +
                       format_double(margin) + " <= 0");
    return t.mu * t.taps * static_cast<double>(t.dims.dim) * t.dims.dim * t.sigma_u2 * t.sigma_v2 /
           margin;
}

double mse_theory(const TheoryInputs& t) { return emse_theory(t) + noise_energy(t.dims, t.sigma_v2); }

double general_cost(const Multivector& d, std::span<const Multivector> a, const Multivector& x,
                    std::span<const Multivector> b) {
    if (a.size() != b.size()) throw LengthMismatch("coefficient lists have different lengths");
    Multivector acc(d.signature());
    for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * (x * b[k]);
    return magnitude_sq(d - acc);
}

}  // namespace gaaf
