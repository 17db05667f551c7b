#pragma once

#include <initializer_list>
#include <vector>

#include "gaaf/multivector.hpp"

namespace gaaf {

/// Ordered M-tuple of multivectors over one shared signature. Fixed
/// length after construction; addition and scaling are entrywise.
class MultivectorArray {
  public:
    MultivectorArray(const Signature& sig, std::size_t taps)
        : sig_(sig), entries_(taps, Multivector(sig)) {
        if (taps == 0) throw LengthMismatch("array needs at least one entry");
    }

    explicit MultivectorArray(std::vector<Multivector> entries) : sig_(), entries_(std::move(entries)) {
        if (entries_.empty()) throw LengthMismatch("array needs at least one entry");
        sig_ = entries_.front().signature();
        for (const Multivector& e : entries_) require_same_signature(sig_, e.signature());
    }

    MultivectorArray(std::initializer_list<Multivector> entries)
        : MultivectorArray(std::vector<Multivector>(entries)) {}

    const Signature& signature() const { return sig_; }
    std::size_t size() const { return entries_.size(); }

    const Multivector& operator[](std::size_t j) const { return entries_[j]; }
    Multivector& operator[](std::size_t j) { return entries_[j]; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    MultivectorArray& operator+=(const MultivectorArray& o) {
        require_same_length(*this, o);
        for (std::size_t j = 0; j < size(); ++j) entries_[j] += o.entries_[j];
        return *this;
    }
    MultivectorArray& operator-=(const MultivectorArray& o) {
        require_same_length(*this, o);
        for (std::size_t j = 0; j < size(); ++j) entries_[j] -= o.entries_[j];
        return *this;
    }
    MultivectorArray& operator*=(double s) {
        for (Multivector& e : entries_) e *= s;
        return *this;
    }

    friend MultivectorArray operator+(MultivectorArray a, const MultivectorArray& b) { return a += b; }
    friend MultivectorArray operator-(MultivectorArray a, const MultivectorArray& b) { return a -= b; }
    friend MultivectorArray operator*(MultivectorArray a, double s) { return a *= s; }
    friend MultivectorArray operator*(double s, MultivectorArray a) { return a *= s; }

    static void require_same_length(const MultivectorArray& a, const MultivectorArray& b) {
        require_same_signature(a.sig_, b.sig_);
        if (a.size() != b.size()) throw LengthMismatch("arrays have different lengths");
    }

  private:
    Signature sig_;
    std::vector<Multivector> entries_;
};

/// Entrywise reversion; the row form ~u* of the column array u.
MultivectorArray reverse_array(const MultivectorArray& u);

/// ~u* w = sum_j reverse(U_j) W_j. The inner product shape used by the
/// filter error d - ~u* w.
Multivector array_product_reversed(const MultivectorArray& u, const MultivectorArray& w);

/// u^T w = sum_j U_j W_j, no reversion. Noncommutative in general.
Multivector array_product_transpose(const MultivectorArray& u, const MultivectorArray& w);

/// ||u||^2 = ~u* u. A multivector, equal to its own reverse; its scalar
/// part is sum_j |U_j|^2 under a Euclidean signature.
Multivector array_norm_sq(const MultivectorArray& u);

/// Entrywise products with a multivector on the left (U W_j) or on the
/// right (W_j U).
MultivectorArray scale_left(const Multivector& m, const MultivectorArray& w);
MultivectorArray scale_right(const MultivectorArray& w, const Multivector& m);

}  // namespace gaaf
