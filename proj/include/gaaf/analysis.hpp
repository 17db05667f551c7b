#pragma once

#include <span>

#include "gaaf/array.hpp"
#include "gaaf/mask.hpp"

namespace gaaf {

/// Dimension of the active subalgebra or subspace: 2^n for the complete
/// algebra, sum of C(n,2k) for the even subalgebra, C(n,g) for a single
/// grade-g subspace.
struct AlgebraDims {
    int dim;
};

AlgebraDims dims_full(int n);
AlgebraDims dims_even(int n);
AlgebraDims dims_grade(int n, int g);
inline AlgebraDims dims_of(const SubalgebraMask& mask) { return {mask.count()}; }

/// Parameters of the steady-state predictions. Per-coefficient variances,
/// identical across grades (circular Gaussian data model).
struct TheoryInputs {
    int taps;          // M
    double mu;
    double sigma_u2;   // per-coefficient regressor variance
    double sigma_v2;   // per-coefficient noise variance
    AlgebraDims dims;
};

/// E[~v v] = dim * sigma_v^2 (= 8 sigma_v^2 on the full G(R^3)).
double noise_energy(const AlgebraDims& dims, double sigma_v2);

/// E[~u* u] = M * dim * sigma_u^2 for an M-tap regressor array.
double regressor_energy(const AlgebraDims& dims, int taps, double sigma_u2);

/// 2 - mu * M * dim * sigma_u^2; the prediction is finite only when this
/// is positive.
double stability_margin(const TheoryInputs& t);

/// Steady-state excess mean-square error
///   zeta = mu M dim^2 sigma_u^2 sigma_v^2 / (2 - mu M dim sigma_u^2).
/// Throws Unstable outside the stability region.
double emse_theory(const TheoryInputs& t);

/// Steady-state MSE = EMSE + dim * sigma_v^2.
double mse_theory(const TheoryInputs& t);

/// General cost |D - sum_k A_k X B_k|^2; the filter cost is the special
/// case X = 1, A_k = ~U_k, B_k = W_k.
double general_cost(const Multivector& d, std::span<const Multivector> a, const Multivector& x,
                    std::span<const Multivector> b);

}  // namespace gaaf
