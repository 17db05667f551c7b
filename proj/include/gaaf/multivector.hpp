#pragma once

#include <array>
#include <cstddef>

#include "gaaf/blade.hpp"
#include "gaaf/signature.hpp"

namespace gaaf {

// Absolute tolerance for invertibility and unit checks (|a^2|, |r ~r - 1|,
// residual odd-grade components).
inline constexpr double kInvertTolerance = 1e-12;

/// Dense multivector: one real coefficient per blade of the algebra,
/// indexed by BladeBits. Immutable-style value type; all arithmetic is
/// by pure functions and operators returning new values.
class Multivector {
  public:
    explicit Multivector(const Signature& sig) : sig_(sig) { coeffs_.fill(0.0); }

    static Multivector scalar(const Signature& sig, double value) {
        Multivector m(sig);
        m.coeffs_[0] = value;
        return m;
    }

    /// Unit basis blade gamma_{...} for the given bit pattern.
    static Multivector basis(const Signature& sig, BladeBits blade) {
        Multivector m(sig);
        m.at(blade) = 1.0;
        return m;
    }

    const Signature& signature() const { return sig_; }
    int dim() const { return sig_.algebra_dim(); }

    double operator[](BladeBits blade) const { return coeffs_[blade]; }
    double& at(BladeBits blade) { return coeffs_[blade]; }

    Multivector& operator+=(const Multivector& o) {
        require_same_signature(sig_, o.sig_);
        for (int i = 0; i < dim(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    Multivector& operator-=(const Multivector& o) {
        require_same_signature(sig_, o.sig_);
        for (int i = 0; i < dim(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    Multivector& operator*=(double s) {
        for (int i = 0; i < dim(); ++i) coeffs_[i] *= s;
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, double s) { return a *= s; }
    friend Multivector operator*(double s, Multivector a) { return a *= s; }
    friend Multivector operator-(Multivector a) { return a *= -1.0; }

    /// Geometric product.
    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        return geometric_product(a, b);
    }

    friend Multivector geometric_product(const Multivector& a, const Multivector& b);
    friend Multivector inner_product(const Multivector& a, const Multivector& b);
    friend Multivector outer_product(const Multivector& a, const Multivector& b);

  private:
    Signature sig_;
    std::array<double, 1 << kMaxDim> coeffs_;
};

/// Grade-g part of A. Throws GradeOutOfRange unless 0 <= g <= n.
Multivector grade_projection(const Multivector& a, int g);

/// Reversion: sign (-1)^{g(g-1)/2} on every grade-g component.
Multivector reverse(const Multivector& a);

/// Scalar part of the geometric product, <AB>.
double scalar_product(const Multivector& a, const Multivector& b);

/// A * reverse(A). Guarded: only defined for Euclidean signatures, where
/// it reduces to the sum of squared coefficients.
double magnitude_sq(const Multivector& a);

/// sqrt(A * reverse(A)), the coefficient 2-norm under Euclidean signature.
double magnitude(const Multivector& a);

/// True when every coefficient of grade != g is exactly zero.
bool is_pure_grade(const Multivector& a, int g);

}  // namespace gaaf
