#pragma once

#include <cstdint>
#include <functional>

#include "gaaf/array.hpp"
#include "gaaf/mask.hpp"

namespace gaaf {

/// Adaptive filter state: M weight multivectors, a positive step size and
/// the subalgebra the data is expected to live in. Steps are pure
/// functions (state in, state out); weights stay inside the mask exactly
/// because even subalgebras are closed under the geometric product -- the
/// step itself never projects.
struct FilterState {
    MultivectorArray w;
    double mu;
    SubalgebraMask mask;
    std::uint64_t iteration = 0;
};

/// Fresh state with w = zero array of the given length.
FilterState make_filter(const SubalgebraMask& mask, std::size_t taps, double mu);

/// Estimation error e = d - ~u* w.
Multivector compute_error(const Multivector& d, const MultivectorArray& u,
                          const MultivectorArray& w);

/// Squared-magnitude cost |d - ~u* w|^2 = sum of squared error coefficients.
double cost(const Multivector& d, const MultivectorArray& u, const MultivectorArray& w);

/// Cost gradient with respect to the weight array: entry j is -2 U_j e.
MultivectorArray gradient(const MultivectorArray& u, const Multivector& e);

struct StepResult {
    FilterState state;
    Multivector error;
};

/// One LMS step: e = d - ~u* w, then W_j += mu U_j e (the factor 2 of the
/// gradient is absorbed into mu). Inputs must lie inside the state's mask.
StepResult lms_step(const FilterState& state, const MultivectorArray& u, const Multivector& d);

/// Error-shaping form: the update uses f(e) in place of e. With f the
/// identity this is exactly lms_step.
using ErrorShaper = std::function<Multivector(const Multivector&)>;
StepResult general_step(const FilterState& state, const MultivectorArray& u,
                        const Multivector& d, const ErrorShaper& f);

/// Weight update W_j += mu U_j e for a caller-supplied error multivector.
/// This is the single update path shared by lms_step, general_step and
/// the simulation harness (which forms e = e_a + v itself).
FilterState apply_error_update(const FilterState& state, const MultivectorArray& u,
                               const Multivector& e);

}  // namespace gaaf
