#pragma once

#include <cstdint>
#include <random>

#include "gaaf/mask.hpp"

namespace gaaf {

// Stateless SplitMix64 mixing step, used to derive stream keys.
std::uint64_t splitmix64(std::uint64_t x);

// Signal tags for per-run substreams.
enum class StreamTag : std::uint64_t { Regressor = 0, Noise = 1 };

/// Seed-to-stream mapping (stable, documented):
///   key = splitmix64(splitmix64(splitmix64(seed) ^ run) ^ tag)
/// and the stream is std::mt19937_64 seeded with that key. Each run of an
/// ensemble owns one Regressor stream and one Noise stream, so an oracle
/// re-running a configuration can reproduce the exact coefficient
/// sequences.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t run, StreamTag tag);

/// Deterministic standard-normal sampler (Box-Muller on 53-bit uniforms).
/// Not stdlib normal_distribution, so sequences are identical across
/// standard libraries.
class GaussianSampler {
  public:
    explicit GaussianSampler(std::mt19937_64 rng) : rng_(rng) {}

    double operator()();

  private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Random multivector: every in-mask coefficient i.i.d. N(0, sigma2),
/// drawn in ascending blade order; everything outside the mask is exactly
/// zero.
Multivector random_multivector(const SubalgebraMask& mask, double sigma2, GaussianSampler& rng);

}  // namespace gaaf
