#include "gaaf/blade.hpp"

#include <atomic>
#include <memory>

namespace gaaf {

BladeProduct blade_product(BladeBits a, BladeBits b, const Signature& sig) {
    // Transposition count for merging the two ascending factor lists:
    // every factor of b must hop over the factors of a with larger index.
    int swaps = 0;
    for (BladeBits t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);

    double sign = (swaps & 1) ? -1.0 : 1.0;
    for (BladeBits common = a & b; common != 0; common &= common - 1) {
        sign *= sig.metric(std::countr_zero(common));
    }
    return {sign, a ^ b};
}

namespace {

std::unique_ptr<const CayleyTable> build_table(const Signature& sig) {
    auto t = std::make_unique<CayleyTable>();
    t->dim = sig.algebra_dim();
    t->sign.fill(0.0);
    for (BladeBits a = 0; a < static_cast<BladeBits>(t->dim); ++a)
        for (BladeBits b = 0; b < static_cast<BladeBits>(t->dim); ++b)
            t->sign[(a << 6) | b] = blade_product(a, b, sig).sign;
    return t;
}

}  // namespace

const CayleyTable& cayley_table(const Signature& sig) {
    // One slot per (p,q,r) with p,q,r <= 6; losers of the CAS race drop
    // their copy and the winner's table lives until program exit.
    static std::array<std::atomic<const CayleyTable*>, 7 * 7 * 7> slots{};
    const int key = sig.p + 7 * sig.q + 49 * sig.r;
    const CayleyTable* existing = slots[key].load(std::memory_order_acquire);
    if (existing) return *existing;

    auto fresh = build_table(sig);
    const CayleyTable* expected = nullptr;
    if (slots[key].compare_exchange_strong(expected, fresh.get(), std::memory_order_acq_rel)) {
        return *fresh.release();
    }
    return *expected;
}

}  // namespace gaaf
