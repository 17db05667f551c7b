#include "gaaf/random.hpp"

#include <cmath>
#include <numbers>

namespace gaaf {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t run, StreamTag tag) {
    const std::uint64_t key =
        splitmix64(splitmix64(splitmix64(seed) ^ run) ^ static_cast<std::uint64_t>(tag));
    return std::mt19937_64(key);
}

double GaussianSampler::operator()() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // 53-bit uniforms; u1 is shifted into (0, 1] so the log is finite.
    const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Multivector random_multivector(const SubalgebraMask& mask, double sigma2, GaussianSampler& rng) {
    if (sigma2 < 0.0) throw Error("variance must be nonnegative");
    Multivector out(mask.sig);
    if (sigma2 == 0.0) return out;
    const double stddev = std::sqrt(sigma2);
    for (BladeBits b = 0; b < static_cast<BladeBits>(out.dim()); ++b)
        if (mask.contains(b)) out.at(b) = stddev * rng();
    return out;
}

}  // namespace gaaf
