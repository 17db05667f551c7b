#include "gaaf/filter.hpp"

namespace gaaf {

namespace {

void require_in_mask(const SubalgebraMask& mask, const MultivectorArray& u,
                     const Multivector& d) {
    if (!mask.holds(d)) throw MaskViolation("desired signal has components outside the mask");
    for (const Multivector& entry : u)
        if (!mask.holds(entry)) throw MaskViolation("regressor has components outside the mask");
}

}  // namespace

FilterState make_filter(const SubalgebraMask& mask, std::size_t taps, double mu) {
    if (mu <= 0.0) throw Error("step size must be positive");
    return {MultivectorArray(mask.sig, taps), mu, mask, 0};
}

Multivector compute_error(const Multivector& d, const MultivectorArray& u,
                          const MultivectorArray& w) {
    return d - array_product_reversed(u, w);
}

double cost(const Multivector& d, const MultivectorArray& u, const MultivectorArray& w) {
    return magnitude_sq(compute_error(d, u, w));
}

MultivectorArray gradient(const MultivectorArray& u, const Multivector& e) {
    MultivectorArray g(u.signature(), u.size());
    for (std::size_t j = 0; j < u.size(); ++j) g[j] = -2.0 * (u[j] * e);
    return g;
}

FilterState apply_error_update(const FilterState& state, const MultivectorArray& u,
                               const Multivector& e) {
    MultivectorArray::require_same_length(u, state.w);
    FilterState next = state;
    for (std::size_t j = 0; j < u.size(); ++j) next.w[j] += state.mu * (u[j] * e);
    ++next.iteration;
    return next;
}

StepResult lms_step(const FilterState& state, const MultivectorArray& u, const Multivector& d) {
    MultivectorArray::require_same_length(u, state.w);
    require_in_mask(state.mask, u, d);
    Multivector e = compute_error(d, u, state.w);
    return {apply_error_update(state, u, e), std::move(e)};
}

StepResult general_step(const FilterState& state, const MultivectorArray& u, const Multivector& d,
                        const ErrorShaper& f) {
    MultivectorArray::require_same_length(u, state.w);
    require_in_mask(state.mask, u, d);
    Multivector e = compute_error(d, u, state.w);
    return {apply_error_update(state, u, f(e)), std::move(e)};
}

}  // namespace gaaf
