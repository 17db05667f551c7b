#include "gaaf/array.hpp"

namespace gaaf {

MultivectorArray reverse_array(const MultivectorArray& u) {
    MultivectorArray out(u.signature(), u.size());
    for (std::size_t j = 0; j < u.size(); ++j) out[j] = reverse(u[j]);
    return out;
}

Multivector array_product_reversed(const MultivectorArray& u, const MultivectorArray& w) {
    MultivectorArray::require_same_length(u, w);
    Multivector acc(u.signature());
    for (std::size_t j = 0; j < u.size(); ++j) acc += reverse(u[j]) * w[j];
    return acc;
}

Multivector array_product_transpose(const MultivectorArray& u, const MultivectorArray& w) {
    MultivectorArray::require_same_length(u, w);
    Multivector acc(u.signature());
    for (std::size_t j = 0; j < u.size(); ++j) acc += u[j] * w[j];
    return acc;
}

Multivector array_norm_sq(const MultivectorArray& u) { return array_product_reversed(u, u); }

MultivectorArray scale_left(const Multivector& m, const MultivectorArray& w) {
    require_same_signature(m.signature(), w.signature());
    MultivectorArray out(w.signature(), w.size());
    for (std::size_t j = 0; j < w.size(); ++j) out[j] = m * w[j];
    return out;
}

MultivectorArray scale_right(const MultivectorArray& w, const Multivector& m) {
    require_same_signature(m.signature(), w.signature());
    MultivectorArray out(w.signature(), w.size());
    for (std::size_t j = 0; j < w.size(); ++j) out[j] = w[j] * m;
    return out;
}

}  // namespace gaaf
