#pragma once

#include <span>

#include "gaaf/multivector.hpp"

namespace gaaf {

/// Inverse of a nonzero 1-vector, a / a^2. Throws NullVector when |a^2|
/// is below tolerance; the input must be pure grade 1.
Multivector vector_inverse(const Multivector& a);

/// Inverse of a versor V = a_1 a_2 ... a_k given its vector factors:
/// V^-1 = a_k^-1 ... a_1^-1. Verifies that the factors actually multiply
/// to V (FactorizationMismatch otherwise).
Multivector versor_inverse(const Multivector& v, std::span<const Multivector> factors);

/// Rotor r = a b from two unit 1-vectors; r ~r = 1 and r lies in the even
/// subalgebra. Rotating with it turns by twice the angle between a and b.
Multivector rotor_from_vectors(const Multivector& a, const Multivector& b);

/// Sandwich x -> r x ~r for a unit rotor. Preserves grade and magnitude.
Multivector rotate(const Multivector& rotor, const Multivector& x);

}  // namespace gaaf
